#pragma once

// Reports shared by all subcommands: a list of checks with witnesses and a
// table of ranks keyed by (hom, degree, weight). The text and JSON
// renderings are produced from the same data in the same order.

#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "pogcat/gr_homology.hpp"

namespace pogcat::cli {

inline constexpr const char* kSchema = "pogcat.report/1";
inline constexpr size_t kMaxWitnesses = 5;

enum class Status { pass, fail, inconclusive, skipped };

inline const char* status_name(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::inconclusive: return "inconclusive";
        default: return "skipped";
    }
}

struct Check {
    std::string name;
    Status status = Status::pass;
    std::string detail;
    std::vector<std::string> witnesses;
    size_t more_witnesses = 0;
};

struct RankRow {
    std::string table;  // what is being counted, e.g. "Gr H C(X, Y)"
    std::string hom;
    int degree = 0;
    Rational weight;
    size_t rank = 0;
    std::vector<int64_t> torsion;
};

struct Report {
    std::string command, input;
    std::vector<std::pair<std::string, std::string>> params;
    std::vector<Check> checks;
    std::vector<RankRow> ranks;

    void param(const std::string& k, const std::string& v) { params.emplace_back(k, v); }

    Check& add(const std::string& name, Status s, const std::string& detail = "", const std::vector<std::string>& witnesses = {}) {
        Check c{name, s, detail, {}, 0};
        for (auto& w : witnesses) {
            if (c.witnesses.size() < kMaxWitnesses)
                c.witnesses.push_back(w);
            else
                ++c.more_witnesses;
        }
        checks.push_back(std::move(c));
        return checks.back();
    }
    Check& add(const std::string& name, bool ok, const std::string& detail = "", const std::vector<std::string>& witnesses = {}) {
        return add(name, ok ? Status::pass : Status::fail, detail, witnesses);
    }

    void add_gr_ranks(const std::string& table, const std::string& hom, const std::map<Rational, std::map<int, AbelianGroup>>& h) {
        for (auto& [w, byk] : h)
            for (auto& [k, g] : byk)
                if (!g.is_zero()) ranks.push_back({table, hom, k, w, g.free_rank, g.torsion});
    }

    Status status() const {
        bool inconclusive = false;
        for (auto& c : checks) {
            if (c.status == Status::fail) return Status::fail;
            if (c.status == Status::inconclusive) inconclusive = true;
        }
        return inconclusive ? Status::inconclusive : Status::pass;
    }

    int exit_code() const {
        switch (status()) {
            case Status::pass: return 0;
            case Status::fail: return 1;
            default: return 3;
        }
    }

    nlohmann::ordered_json json() const {
        nlohmann::ordered_json j;
        j["schema"] = kSchema;
        j["command"] = command;
        j["input"] = input;
        j["params"] = nlohmann::ordered_json::object();
        for (auto& [k, v] : params) j["params"][k] = v;
        j["checks"] = nlohmann::ordered_json::array();
        for (auto& c : checks) {
            nlohmann::ordered_json e;
            e["name"] = c.name;
            e["status"] = status_name(c.status);
            e["detail"] = c.detail;
            e["witnesses"] = c.witnesses;
            e["more_witnesses"] = c.more_witnesses;
            j["checks"].push_back(e);
        }
        j["ranks"] = nlohmann::ordered_json::array();
        for (auto& r : ranks) {
            nlohmann::ordered_json e;
            e["table"] = r.table;
            e["hom"] = r.hom;
            e["degree"] = r.degree;
            e["weight"] = r.weight.str();
            e["rank"] = r.rank;
            e["torsion"] = r.torsion;
            j["ranks"].push_back(e);
        }
        j["status"] = status_name(status());
        return j;
    }

    std::string text() const {
        std::ostringstream out;
        out << kSchema << "\ncommand " << command << "\n";
        if (!input.empty()) out << "input " << input << "\n";
        for (auto& [k, v] : params) out << "param " << k << " = " << v << "\n";
        for (auto& c : checks) {
            out << "check " << status_name(c.status) << " " << c.name;
            if (!c.detail.empty()) out << ": " << c.detail;
            out << "\n";
            for (auto& w : c.witnesses) out << "  witness " << w << "\n";
            if (c.more_witnesses) out << "  and " << c.more_witnesses << " more\n";
        }
        for (auto& r : ranks) {
            out << "rank " << r.table << " " << r.hom << " degree " << r.degree << " weight " << r.weight.str() << ": " << r.rank;
            for (int64_t t : r.torsion) out << " + Z/" << t;
            out << "\n";
        }
        out << "status " << status_name(status()) << "\n";
        return out.str();
    }
};

}  // namespace pogcat::cli
