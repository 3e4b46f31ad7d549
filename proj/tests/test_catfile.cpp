#include <gtest/gtest.h>

#include <filesystem>

#include "fixtures_cainf.hpp"
#include "pogcat/catfile.hpp"
#include "pogcat/linear_io.hpp"

using namespace pogcat;

namespace {

std::string fixture(const std::string& name) { return std::string(POGCAT_FIXTURES) + "/" + name; }

const char* kHeader = "pog Z/2\ncoeff z\ncutoff 2\neps 1/2\ndmax 3\nlmax 1\n";

// Tables rendered with generator names, so generator order does not matter.
std::map<std::string, std::string> rendered(const TableCategory& C) {
    std::map<std::string, std::string> out;
    for (int g = 0; g < static_cast<int>(C.num_gens()); ++g) {
        const Gen& x = C.gen(g);
        out["gen " + x.name] = C.object_name(x.src) + ">" + C.object_name(x.tgt) + " " + std::to_string(x.degree) + " " + x.weight.str();
    }
    for (int x : C.objects()) out["unit " + C.object_name(x)] = C.str(C.unit(x));
    for (auto& [x, v] : C.mu0_table()) out["mu0 " + C.object_name(x)] = C.str(v);
    for (auto& [t, v] : C.mu_table()) {
        std::string k = "mu";
        for (int g : t) k += " " + C.gen(g).name;
        out[k] = C.str(v);
    }
    return out;
}

::testing::AssertionResult same_tables(const TableCategory& A, const TableCategory& B) {
    auto a = rendered(A), b = rendered(B);
    for (auto& [k, v] : a) {
        auto it = b.find(k);
        if (it == b.end()) return ::testing::AssertionFailure() << k << " only on the left";
        if (it->second != v) return ::testing::AssertionFailure() << k << ": " << v << " vs " << it->second;
    }
    if (a.size() != b.size()) return ::testing::AssertionFailure() << "right side has extra entries";
    return ::testing::AssertionSuccess();
}

}  // namespace

TEST(CategoryFile, BundledFilesMatchBuilders) {
    EXPECT_TRUE(same_tables(load_category(fixture("cch.cat")).cat, fixtures::cch(Coeff::Z).cat));
    EXPECT_TRUE(same_tables(load_category(fixture("curved_pair.cat")).cat, fixtures::curved_pair()));
    EXPECT_TRUE(same_tables(load_category(fixture("unit.cat")).cat, unit_category(Coeff::Z, Rational(2), Rational(1))));
    auto tel = fixtures::telescope_fixtures(Coeff::Z);
    auto f = load_category(fixture("telescope_nilpotent.cat"));
    EXPECT_TRUE(same_tables(f.cat, tel[0].C));
    ASSERT_NE(f.find_arrow("m"), nullptr);
    EXPECT_EQ(f.find_arrow("m")->value, tel[0].m);
}

TEST(CategoryFile, EveryBundledFileRoundTrips) {
    size_t n = 0;
    for (auto& p : std::filesystem::directory_iterator(POGCAT_FIXTURES)) {
        if (p.path().extension() != ".cat") continue;
        auto f = load_category(p.path().string());
        std::string once = write_category(f);
        auto g = parse_category(once);
        EXPECT_EQ(write_category(g), once) << p.path();
        EXPECT_TRUE(same_tables(f.cat, g.cat)) << p.path();
        ++n;
    }
    EXPECT_GE(n, 10u);
}

TEST(CategoryFile, TermsAndCoefficients) {
    auto f = parse_category(std::string(kHeader) +
                            "objects X\nhom X X\n  e 0 0\n  a 1 0\n  b 1 1/2\n  c 2 1/2\nunit X e\n"
                            "mu 2: (a, a) -> 3 T^1/2 b - c + 2*c\nmu 1: (a) -> -T^1 b\nmu 1: (b) -> 0\n");
    const auto& C = f.cat;
    int a = *C.find_gen("a"), b = *C.find_gen("b"), c = *C.find_gen("c");
    Element want;
    C.add_term(want, {b, Rational(1, 2)}, 3);
    C.add_term(want, {c, Rational(0)}, 1);
    EXPECT_EQ(C.mu({a, a}), want);
    Element minus_tb;
    C.add_term(minus_tb, {b, Rational(1)}, -1);
    EXPECT_EQ(C.mu({a}), minus_tb);
    EXPECT_TRUE(C.mu({b}).empty());
}

TEST(CategoryFile, F2FilesReduceCoefficients) {
    std::string text = std::string(kHeader);
    text.replace(text.find("coeff z"), 7, "coeff f2");
    auto f = parse_category(text + "objects X\nhom X X\n  e 0 0\n  a 0 0\nunit X e\nmu 2: (a, a) -> 2 a\n");
    int a = *f.cat.find_gen("a");
    EXPECT_TRUE(f.cat.mu({a, a}).empty());
}

struct BadInput {
    std::string body;
    int line, column;
    std::string message;
};

TEST(CategoryFile, ErrorsCarryLineAndColumn) {
    const std::string objs = "objects X\nhom X X\n  e 0 0\n";  // lines 7-9
    const std::vector<BadInput> cases{
        {objs + "unit X e\nfrobnicate X\n", 11, 1, "unknown key"},
        {objs + "unit X e\nmu 2: (e, q) -> e\n", 11, 11, "unknown generator q"},
        {objs + "  e 1 0\nunit X e\n", 10, 3, "duplicate generator"},
        {objs + "  z 0 1/3\nunit X e\n", 10, 7, "not in Z/2"},
        {objs + "unit X e\nmu 3: (e, e) -> e\n", 11, 4, "arity 3"},
        {objs + "unit X e\n  stray 0 0\n", 11, 3, "outside a hom block"},
        {objs + "unit X e\nmu 2: (e, e) -> e +\n", 11, 20, "expected a name"},
        {objs + "unit Y e\n", 10, 6, "unknown object Y"},
        {objs, 10, 1, "has no unit"},
        {"pog Z/2\ncoeff z\nobjects X\n", 3, 1, "'cutoff' must come before"},
        {"pog Z/2\npog Q\n", 2, 1, "given twice"},
        {"pog Z/0\n", 1, 5, "bad pog spec"},
        {"coeff q\n", 1, 7, "z or f2"},
        {"cutoff -1\n", 1, 8, "must be positive"},
    };
    for (auto& bad : cases) {
        std::string text = bad.body.rfind("pog", 0) == 0 || bad.body.rfind("coeff", 0) == 0 || bad.body.rfind("cutoff", 0) == 0
                               ? bad.body
                               : std::string(kHeader) + bad.body;
        try {
            parse_category(text);
            ADD_FAILURE() << "accepted: " << bad.message;
        } catch (const ParseError& e) {
            EXPECT_EQ(e.line, bad.line) << e.what();
            EXPECT_EQ(e.column, bad.column) << e.what();
            EXPECT_NE(std::string(e.what()).find(bad.message), std::string::npos) << e.what();
        }
    }
}

TEST(CategoryFile, MissingKeysAreReported) {
    EXPECT_THROW(parse_category("pog Z\ncoeff z\ncutoff 1\neps 1\ndmax 2\n"), ParseError);
    EXPECT_THROW(parse_category(std::string(kHeader)), ParseError);
}

TEST(GradedFile, GroupRingIsACategory) {
    auto f = load_category(fixture("group_ring_half.cat"));
    ASSERT_EQ(f.kind, FileKind::graded);
    auto L = to_linear(f);
    EXPECT_TRUE(check_category(L.cat).ok());
    EXPECT_EQ(L.cat.num_arrows(), 2u);
}

TEST(GradedFile, GradesMustAdd) {
    std::string text = "kind graded\npog Z\ncoeff z\ncutoff 100\neps 1\ndmax 2\nlmax 0\nobjects X\nhom X X\n"
                       "  e 0 0\n  a 0 1\n  b 0 1\nunit X e\nmu 2: (a, a) -> b\n";
    EXPECT_THROW(to_linear(parse_category(text)), CategoryError);
    text.replace(text.find("  b 0 1"), 7, "  b 0 2");
    EXPECT_NO_THROW(to_linear(parse_category(text)));
}

TEST(GradedFile, StepLinesGiveAnAction) {
    auto f = load_category(fixture("path.cat"));
    auto L = to_linear(f, false);
    CategoryAction A = file_action(f, L);
    std::vector<Rational> objs{Rational(0), Rational(1), Rational(2)};
    std::vector<Rational> orbit_window;
    for (int k = -3; k <= 3; ++k) orbit_window.push_back(Rational(k));
    auto rep = check_orbit_unorbit(L.cat, A, objs, orbit_window);
    EXPECT_TRUE(rep.ok()) << (rep.ok() ? "" : rep.mismatches.front());
    EXPECT_GT(rep.homs_compared, 0u);
}
