#include "degen/io.hpp"

#include <sstream>

#include "degen/error.hpp"

namespace degen {

using nlohmann::json;

json to_json(const Rat& r) { return r.str(); }

json to_json(const Poly& p) { return to_json(p.coeffs()); }

json to_json(const std::vector<Rat>& v) {
    json out = json::array();
    for (const auto& r : v) out.push_back(r.str());
    return out;
}

json to_json(const std::vector<Poly>& v) {
    json out = json::array();
    for (const auto& p : v) out.push_back(to_json(p));
    return out;
}

json to_json(const GfValues& v) {
    return std::visit([](const auto& xs) { return to_json(xs); }, v);
}

json to_json(const McEstimate& e) {
    return {{"mean", e.mean},
            {"std_error", e.std_error},
            {"n_samples", e.n_samples},
            {"seed", e.seed},
            {"target_exact", e.target_exact},
            {"target", e.target.str()},
            {"pass", e.passes()}};
}

json to_json(const CheckReport& r) {
    json out{{"check_id", r.id}, {"cells_run", r.cells_run}, {"cells_failed", r.cells_failed}, {"seconds", r.seconds}};
    if (r.witness) out["witness"] = {{"cell", r.witness->cell}, {"lhs", r.witness->lhs}, {"rhs", r.witness->rhs}};
    return out;
}

json to_json(const SuiteReport& r) {
    json checks = json::array();
    for (const auto& c : r.reports) checks.push_back(to_json(c));
    return {{"passed", r.passed()}, {"checks", checks}, {"warnings", r.warnings}};
}

Rat rat_from_json(const json& j) {
    if (j.is_string()) return Rat::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rat(j.get<std::int64_t>());
    throw ParseError("expected a rational string, got " + j.dump());
}

Poly poly_from_json(const json& j, Var var) {
    if (!j.is_array()) throw ParseError("expected a coefficient array, got " + j.dump());
    std::vector<Rat> cs;
    for (const auto& c : j) cs.push_back(rat_from_json(c));
    return Poly(var, std::move(cs));
}

namespace {

template <typename Table>
std::string table_csv(const Table& t) {
    std::ostringstream os;
    os << "n";
    for (int k = 0; k <= t.nmax(); ++k) os << ",k=" << k;
    os << "\n";
    for (int n = 0; n <= t.nmax(); ++n) {
        os << n;
        for (int k = 0; k <= t.nmax(); ++k) os << "," << t.at(n, k).str();
        os << "\n";
    }
    return os.str();
}

template <typename Table>
json table_rows(const Table& t) {
    json rows = json::array();
    for (int n = 0; n <= t.nmax(); ++n) rows.push_back(to_json(t.row(n)));
    return rows;
}

} // namespace

std::string to_csv(const TriangleTable& t) { return table_csv(t); }
std::string to_csv(const WhitneyTable& t) { return table_csv(t); }

json to_json(const TriangleTable& t) {
    return {{"kind", to_string(t.kind())}, {"lambda", t.lambda().str()}, {"nmax", t.nmax()}, {"rows", table_rows(t)}};
}

std::string to_string(WhitneyKind kind) {
    switch (kind) {
    case WhitneyKind::W_classical: return "W";
    case WhitneyKind::V_classical: return "V";
    case WhitneyKind::W_deg: return "Wdeg";
    case WhitneyKind::W_r_deg: return "Wrdeg";
    }
    return "?";
}

json to_json(const WhitneyTable& t) {
    const auto& p = t.params();
    return {{"kind", to_string(t.kind())}, {"lambda", p.lambda.str()}, {"m", p.m}, {"r", p.r},
            {"nmax", t.nmax()},           {"rows", table_rows(t)}};
}

std::string to_csv(const SuiteReport& r) {
    std::ostringstream os;
    os << "check_id,cells_run,cells_failed,seconds,witness_cell,witness_lhs,witness_rhs\n";
    auto quote = [](const std::string& s) {
        std::string out = "\"";
        for (char c : s) out += (c == '"') ? std::string("\"\"") : std::string(1, c);
        return out + "\"";
    };
    for (const auto& c : r.reports) {
        os << c.id << "," << c.cells_run << "," << c.cells_failed << "," << c.seconds << ",";
        if (c.witness) os << quote(c.witness->cell) << "," << quote(c.witness->lhs) << "," << quote(c.witness->rhs);
        else os << ",,";
        os << "\n";
    }
    return os.str();
}

std::string to_markdown(const SuiteReport& r) {
    std::ostringstream os;
    os << "| check | cells | failed | seconds | witness |\n|---|---:|---:|---:|---|\n";
    for (const auto& c : r.reports) {
        os << "| " << c.id << " | " << c.cells_run << " | " << c.cells_failed << " | " << c.seconds << " | ";
        if (c.witness) os << "`" << c.witness->cell << "`: " << c.witness->lhs << " vs " << c.witness->rhs;
        os << " |\n";
    }
    for (const auto& w : r.warnings) os << "\n> warning: " << w << "\n";
    os << "\n**" << (r.passed() ? "PASS" : "FAIL") << "**\n";
    return os.str();
}

} // namespace degen
