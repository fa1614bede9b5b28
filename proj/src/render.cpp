#include "curvegerm/render.hpp"

#include <sstream>

namespace curvegerm {

namespace {

template <typename T>
std::string join_any(const std::vector<T>& values) {
    std::string out = "[";
    for (std::size_t i = 0; i < values.size(); ++i) out += (i ? ", " : "") + std::to_string(values[i]);
    return out + "]";
}

Json direction_json(const Direction& d) {
    if (d.is_vertical()) return Json{{"type", "vertical"}};
    return Json{{"type", "slope"}, {"slope", to_string(d.slope_value())}};
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

class Table {
   public:
    void row(const std::string& key, const std::string& value) { rows_.emplace_back(key, value); }
    std::string str() const {
        std::size_t width = 0;
        for (const auto& [k, v] : rows_) width = std::max(width, k.size());
        std::ostringstream os;
        for (const auto& [k, v] : rows_) os << k << std::string(width - k.size() + 2, ' ') << v << '\n';
        return os.str();
    }

   private:
    std::vector<std::pair<std::string, std::string>> rows_;
};

}  // namespace

std::string join(const std::vector<unsigned>& values) { return join_any(values); }
std::string join(const std::vector<std::int64_t>& values) { return join_any(values); }

Json rational_to_json(const Rational& q) {
    if (q.get_den() == 1) return Json(q.get_num().get_si());
    if (q.get_den() == 2) return Json(q.get_d());
    return Json(to_string(q));
}

Json to_json(const PuiseuxCharacteristic& c) {
    return Json{{"m", c.multiplicity()}, {"betas", c.betas()}};
}

Json to_json(const LawCheck& check, std::size_t stage) {
    return Json{{"stage", stage},
                {"m", check.m},
                {"mu_drop", check.mu_drop},
                {"tau_drop", check.tau_drop},
                {"dmin_lower", check.dmin_lower},
                {"monotone_before", check.monotone_before},
                {"monotone_after", check.monotone_after},
                {"mu_drop_exact", check.mu_drop_exact},
                {"tau_drop_bound_ok", check.tau_drop_bound_ok},
                {"monotone_strictly_increased", check.monotone_strictly_increased}};
}

Json to_json(const InvariantReport& r) {
    Json j;
    j["input"] = to_string(r.input);
    j["multiplicity"] = r.multiplicity;
    j["milnor"] = r.milnor;
    j["tjurina"] = r.tjurina;
    j["monotone"] = r.monotone;
    j["differential_gap"] = rational_to_json(r.differential_gap);
    j["is_branch"] = r.is_branch;
    j["delta"] = r.delta ? Json(*r.delta) : Json(nullptr);
    j["puiseux_characteristic"] = r.characteristic ? to_json(*r.characteristic) : Json(nullptr);
    j["multiplicity_sequence"] = r.multiplicity_sequence ? Json(*r.multiplicity_sequence) : Json(nullptr);
    if (r.law_checks) {
        Json checks = Json::array();
        for (std::size_t i = 0; i < r.law_checks->size(); ++i) checks.push_back(to_json((*r.law_checks)[i], i));
        j["law_checks"] = std::move(checks);
    } else {
        j["law_checks"] = nullptr;
    }
    j["theorem_chain"] = r.theorem_chain ? Json(*r.theorem_chain) : Json(nullptr);
    j["ratio_ok"] = r.ratio_ok ? Json(*r.ratio_ok) : Json(nullptr);
    return j;
}

Json to_json(const ResolutionSequence& seq, const std::vector<std::int64_t>& chain) {
    Json steps = Json::array();
    for (std::size_t i = 0; i < seq.steps.size(); ++i) {
        const auto& s = seq.steps[i];
        steps.push_back(Json{{"stage", i},
                             {"chart", to_string(s.chart)},
                             {"direction", direction_json(s.direction)},
                             {"multiplicity", s.multiplicity_before},
                             {"strict_transform", to_string(s.strict_transform)}});
    }
    Json j;
    j["input"] = to_string(seq.input);
    j["steps"] = std::move(steps);
    j["multiplicity_sequence"] = seq.multiplicity_sequence;
    j["puiseux_characteristic"] = to_json(characteristic_from_sequence(seq));
    j["delta"] = delta_from_sequence(seq);
    j["final_smooth"] = to_string(seq.final_smooth);
    j["theorem_chain"] = chain;
    j["theorem_chain_valid"] = chain_is_valid(chain);
    return j;
}

Json to_json(const ComparisonVerdict& v) {
    return Json{{"candidate", to_json(v.candidate)},
                {"base", to_json(v.base)},
                {"verdict", to_string(v.verdict)},
                {"reasons", v.reasons}};
}

std::string to_table(const InvariantReport& r) {
    Table t;
    t.row("input", to_string(r.input));
    t.row("multiplicity", std::to_string(r.multiplicity));
    t.row("milnor", std::to_string(r.milnor));
    t.row("tjurina", std::to_string(r.tjurina));
    t.row("3mu-4tau", std::to_string(r.monotone));
    t.row("tau-mu/2", to_string(r.differential_gap));
    t.row("branch", yes_no(r.is_branch));
    if (r.ratio_ok) t.row("mu/tau < 4/3", yes_no(*r.ratio_ok));
    if (r.is_branch) {
        t.row("delta", std::to_string(*r.delta));
        t.row("puiseux", to_string(*r.characteristic));
        t.row("multiplicities", join(*r.multiplicity_sequence));
        t.row("theorem chain", join(*r.theorem_chain));
        for (std::size_t i = 0; i < r.law_checks->size(); ++i) {
            const auto& c = (*r.law_checks)[i];
            std::ostringstream os;
            os << "m=" << c.m << " mu_drop=" << c.mu_drop << " tau_drop=" << c.tau_drop
               << " dmin_lower=" << c.dmin_lower << " " << (c.all_ok() ? "ok" : "FAILED");
            t.row("blowup " + std::to_string(i), os.str());
        }
    }
    return t.str();
}

std::string to_table(const ResolutionSequence& seq, const std::vector<std::int64_t>& chain) {
    std::ostringstream os;
    os << "input: " << to_string(seq.input) << '\n';
    for (std::size_t i = 0; i < seq.steps.size(); ++i) {
        const auto& s = seq.steps[i];
        os << "step " << i << ": " << to_string(s.chart) << ", " << to_string(s.direction)
           << ", m=" << s.multiplicity_before << ", strict transform " << to_string(s.strict_transform) << '\n';
    }
    os << "multiplicity sequence: " << join(seq.multiplicity_sequence) << '\n';
    os << "puiseux characteristic: " << to_string(characteristic_from_sequence(seq)) << '\n';
    os << "delta: " << delta_from_sequence(seq) << '\n';
    os << "3mu-4tau chain: " << join(chain) << (chain_is_valid(chain) ? " (strictly increasing to 0)" : " (INVALID)")
       << '\n';
    return os.str();
}

std::string to_table(const ComparisonVerdict& v) {
    std::ostringstream os;
    os << "candidate: " << to_string(v.candidate.input) << "  mu=" << v.candidate.milnor
       << " tau=" << v.candidate.tjurina << " 3mu-4tau=" << v.candidate.monotone << '\n';
    os << "base:      " << to_string(v.base.input) << "  mu=" << v.base.milnor << " tau=" << v.base.tjurina
       << " 3mu-4tau=" << v.base.monotone << '\n';
    os << "verdict:   " << to_string(v.verdict) << '\n';
    for (const auto& r : v.reasons) os << "  " << r << '\n';
    return os.str();
}

}  // namespace curvegerm
