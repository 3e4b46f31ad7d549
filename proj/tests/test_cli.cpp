#include <gtest/gtest.h>
#include <json.hpp>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace {

namespace fs = std::filesystem;

struct Outcome {
    int code = -1;
    std::string out, err;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path scratch_dir() {
    fs::path d = fs::temp_directory_path() / ("pogcat_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
}

Outcome run(const std::string& args) {
    static const fs::path dir = scratch_dir();
    const fs::path err = dir / "stderr.txt";
    std::string cmd = std::string(POGCAT_BIN) + " " + args + " 2>" + err.string();
    Outcome r;
    FILE* p = ::popen(cmd.c_str(), "r");
    if (!p) return r;
    char buf[4096];
    size_t n;
    while ((n = std::fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
    int st = ::pclose(p);
    r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    r.err = slurp(err);
    return r;
}

std::string fixture(const std::string& name) { return std::string(POGCAT_FIXTURES) + "/" + name; }

std::string write_temp(const std::string& name, const std::string& text) {
    static const fs::path dir = scratch_dir();
    fs::path p = dir / name;
    std::ofstream(p) << text;
    return p.string();
}

// The text rendering, rebuilt from the JSON one.
std::string text_from_json(const nlohmann::ordered_json& j) {
    std::ostringstream out;
    out << j["schema"].get<std::string>() << "\ncommand " << j["command"].get<std::string>() << "\n";
    if (!j["input"].get<std::string>().empty()) out << "input " << j["input"].get<std::string>() << "\n";
    for (auto& [k, v] : j["params"].items()) out << "param " << k << " = " << v.get<std::string>() << "\n";
    for (auto& c : j["checks"]) {
        out << "check " << c["status"].get<std::string>() << " " << c["name"].get<std::string>();
        if (!c["detail"].get<std::string>().empty()) out << ": " << c["detail"].get<std::string>();
        out << "\n";
        for (auto& w : c["witnesses"]) out << "  witness " << w.get<std::string>() << "\n";
        if (c["more_witnesses"].get<size_t>()) out << "  and " << c["more_witnesses"].get<size_t>() << " more\n";
    }
    for (auto& r : j["ranks"]) {
        out << "rank " << r["table"].get<std::string>() << " " << r["hom"].get<std::string>() << " degree "
            << r["degree"].get<int>() << " weight " << r["weight"].get<std::string>() << ": " << r["rank"].get<size_t>();
        for (auto& t : r["torsion"]) out << " + Z/" << t.get<int64_t>();
        out << "\n";
    }
    out << "status " << j["status"].get<std::string>() << "\n";
    return out.str();
}

// Negates the first term on the right of the n-th `mu` line.
std::string flip_mu_line(const std::string& text, int n, std::string* flipped) {
    std::istringstream in(text);
    std::ostringstream out;
    std::string line;
    int seen = 0;
    while (std::getline(in, line)) {
        if (line.rfind("mu ", 0) == 0 && seen++ == n) {
            size_t at = line.find("-> ") + 3;
            if (line[at] == '-')
                line.erase(at, 1);
            else
                line.insert(at, "-");
            *flipped = line;
        }
        out << line << "\n";
    }
    return out.str();
}

int count_mu_lines(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int n = 0;
    while (std::getline(in, line)) n += line.rfind("mu ", 0) == 0;
    return n;
}

}  // namespace

TEST(Cli, UnitAndCchPass) {
    for (const char* f : {"unit.cat", "cch.cat"}) {
        Outcome r = run("check " + fixture(f));
        EXPECT_EQ(r.code, 0) << f << "\n" << r.out << r.err;
        EXPECT_NE(r.out.find("\nstatus pass\n"), std::string::npos) << f;
    }
}

TEST(Cli, FlippedCoefficientFails) {
    const std::string text = slurp(fixture("cch.cat"));
    const int n = count_mu_lines(text);
    ASSERT_GT(n, 8);
    for (int k = 0; k < n; k += n / 8) {
        std::string line;
        std::string path = write_temp("flipped.cat", flip_mu_line(text, k, &line));
        Outcome r = run("check " + path);
        EXPECT_EQ(r.code, 1) << line << "\n" << r.out << r.err;
        EXPECT_NE(r.out.find("check fail"), std::string::npos) << line;
    }
}

TEST(Cli, ParseErrorsExitTwoWithPosition) {
    std::string path = write_temp("broken.cat", "kind curved\npog Z\ncoeff q\n");
    Outcome r = run("check " + path);
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("line 3, column 7"), std::string::npos) << r.err;
    EXPECT_TRUE(r.out.empty());
}

TEST(Cli, UsageErrorsExitTwo) {
    EXPECT_EQ(run("").code, 2);
    EXPECT_EQ(run("frobnicate " + fixture("unit.cat")).code, 2);
    EXPECT_EQ(run("check /nonexistent/file.cat").code, 2);
    EXPECT_EQ(run("check " + fixture("unit.cat") + " --cutoff 0").code, 2);
    EXPECT_EQ(run("check " + fixture("unit.cat") + " --coeff q").code, 2);
    EXPECT_EQ(run("quotient " + fixture("unit.cat")).code, 2);
    EXPECT_EQ(run("orbit " + fixture("unit.cat")).code, 2);
    EXPECT_EQ(run("orbit " + fixture("circle_sixths.cat")).code, 2);
    EXPECT_EQ(run("--help").code, 0);
}

TEST(Cli, ShortWindowsAreInconclusive) {
    Outcome r = run("localize " + fixture("telescope_nilpotent.cat") + " --lmax 1");
    EXPECT_EQ(r.code, 3) << r.out;
    EXPECT_EQ(run("localize " + fixture("telescope_nilpotent.cat")).code, 0);
    EXPECT_EQ(run("pipeline " + fixture("exchange.cat") + " --depth 1").code, 3);
    EXPECT_EQ(run("pipeline " + fixture("exchange.cat") + " --depth 2").code, 0);
}

TEST(Cli, EverySubcommandPassesOnItsFixtures) {
    const std::vector<std::string> cmds = {
        "check " + fixture("curved_pair.cat"),
        "check " + fixture("path.cat"),
        "homology " + fixture("cch.cat"),
        "quotient " + fixture("curved_pair.cat"),
        "quotient " + fixture("contractible.cat"),
        "localize " + fixture("telescope_idempotent.cat"),
        "tw " + fixture("telescope_square_zero.cat"),
        "bc " + fixture("curved_pair.cat") + " --coeff f2",
        "orbit " + fixture("path.cat"),
        "unorbit " + fixture("circle_sixths.cat"),
        "reconstruct " + fixture("group_ring_half.cat"),
        "pipeline " + fixture("point.cat"),
        "demo-novikov --n 6 --cutoff 3",
    };
    for (auto& c : cmds) {
        Outcome r = run(c);
        EXPECT_EQ(r.code, 0) << c << "\n" << r.out << r.err;
    }
}

TEST(Cli, OutputIsDeterministicAndRenderingsAgree) {
    const std::vector<std::string> cmds = {
        "check " + fixture("cch.cat"),
        "quotient " + fixture("curved_pair.cat"),
        "localize " + fixture("telescope_nilpotent.cat") + " --lmax 1",
        "bc " + fixture("contractible.cat") + " --coeff f2",
        "pipeline " + fixture("exchange.cat"),
        "demo-novikov",
    };
    for (auto& c : cmds) {
        Outcome t1 = run(c), t2 = run(c), j1 = run(c + " --json"), j2 = run(c + " --json");
        EXPECT_EQ(t1.out, t2.out) << c;
        EXPECT_EQ(j1.out, j2.out) << c;
        EXPECT_EQ(t1.code, j1.code) << c;
        auto j = nlohmann::ordered_json::parse(j1.out);
        EXPECT_EQ(j["schema"], "pogcat.report/1");
        EXPECT_EQ(text_from_json(j), t1.out) << c;
    }
}
