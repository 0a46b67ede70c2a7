#include "degen/stirling.hpp"

#include <map>
#include <mutex>
#include <string>
#include <tuple>

#include "degen/error.hpp"

namespace degen {

DegParams::DegParams(Rat lambda_, int m_, int r_) : lambda(std::move(lambda_)), m(m_), r(r_) {
    if (m < 1) throw DomainError("DegParams: m must be >= 1");
    if (r < 0) throw DomainError("DegParams: r must be >= 0");
}

Poly falling_poly(int n) { return deg_falling_poly(n, Rat(1)); }

Poly deg_falling_poly(int n, const Rat& lambda) {
    if (n < 0) throw DomainError("deg_falling_poly: n must be nonnegative");
    Poly acc = Poly::constant(Rat(1));
    for (int j = 0; j < n; ++j) acc *= Poly::linear(-(Rat(j) * lambda), Rat(1));
    return acc;
}

Rat deg_falling_eval(const Rat& x, int n, const Rat& lambda) {
    if (n < 0) throw DomainError("deg_falling_eval: n must be nonnegative");
    Rat acc(1);
    for (int j = 0; j < n; ++j) {
        acc *= x - Rat(j) * lambda;
        if (acc.is_zero()) break;
    }
    return acc;
}

namespace {

// Back-substitution against a monic basis b_0, b_1, ... with deg b_k = k.
template <typename Basis>
std::vector<Rat> to_monic_basis(Poly p, Basis&& basis) {
    std::vector<Rat> out(static_cast<std::size_t>(std::max(p.degree() + 1, 0)));
    while (!p.is_zero()) {
        int k = p.degree();
        Rat c = p.leading();
        out[static_cast<std::size_t>(k)] = c;
        p -= basis(k) * c;
    }
    return out;
}

std::vector<Rat> padded(std::vector<Rat> row, int n) {
    row.resize(static_cast<std::size_t>(n) + 1);
    return row;
}

std::vector<std::vector<Rat>> build_rows(StirlingKind kind, const Rat& lambda, int nmax) {
    std::vector<std::vector<Rat>> rows;
    rows.reserve(static_cast<std::size_t>(nmax) + 1);
    for (int n = 0; n <= nmax; ++n) {
        switch (kind) {
        case StirlingKind::S1:
            rows.push_back(padded(falling_poly(n).coeffs(), n));
            break;
        case StirlingKind::S2:
            rows.push_back(padded(to_falling_basis(Poly::monomial(Rat(1), n)), n));
            break;
        case StirlingKind::S1deg:
            rows.push_back(padded(to_deg_falling_basis(falling_poly(n), lambda), n));
            break;
        case StirlingKind::S2deg:
            rows.push_back(padded(to_falling_basis(deg_falling_poly(n, lambda)), n));
            break;
        }
    }
    return rows;
}

bool is_classical(StirlingKind kind) { return kind == StirlingKind::S1 || kind == StirlingKind::S2; }

struct TableCache {
    std::mutex mu;
    std::map<std::tuple<int, std::string, int>, std::shared_ptr<const TriangleTable>> tables;
};

TableCache& cache() {
    static TableCache c;
    return c;
}

} // namespace

std::vector<Rat> to_falling_basis(const Poly& p) {
    if (p.var() != Var::X) throw IndeterminateMismatch("to_falling_basis expects a polynomial in x");
    return to_monic_basis(p, [](int k) { return falling_poly(k); });
}

std::vector<Rat> to_deg_falling_basis(const Poly& p, const Rat& lambda) {
    if (p.var() != Var::X)
        throw IndeterminateMismatch("to_deg_falling_basis expects a polynomial in x");
    return to_monic_basis(p, [&](int k) { return deg_falling_poly(k, lambda); });
}

TriangleTable::TriangleTable(StirlingKind kind, Rat lambda, std::vector<std::vector<Rat>> rows)
    : kind_(kind), lambda_(std::move(lambda)), rows_(std::move(rows)) {}

Rat TriangleTable::at(int n, int k) const {
    if (n < 0 || n > nmax()) throw DomainError("TriangleTable::at: n out of range");
    if (k < 0 || k > n) return Rat(0);
    return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

std::shared_ptr<const TriangleTable> stirling_table(StirlingKind kind, const Rat& lambda, int nmax) {
    if (nmax < 0 || nmax > kMaxTableN)
        throw DomainError("stirling_table: nmax must be in 0.." + std::to_string(kMaxTableN));
    const Rat key_lambda = is_classical(kind) ? Rat(0) : lambda;
    auto key = std::make_tuple(static_cast<int>(kind), key_lambda.str(), nmax);
    {
        std::lock_guard lock(cache().mu);
        if (auto it = cache().tables.find(key); it != cache().tables.end()) return it->second;
    }
    // Built outside the lock; a racing duplicate build is harmless.
    auto table = std::make_shared<const TriangleTable>(kind, key_lambda, build_rows(kind, key_lambda, nmax));
    std::lock_guard lock(cache().mu);
    return cache().tables.emplace(key, std::move(table)).first->second;
}

namespace {

Rat lookup(StirlingKind kind, int n, int k, const Rat& lambda) {
    if (n < 0) throw DomainError("Stirling index n must be nonnegative");
    // Round the table size up so nearby n share one cache entry.
    int nmax = std::max(16, n);
    return stirling_table(kind, lambda, nmax)->at(n, k);
}

} // namespace

Rat stirling1(int n, int k) { return lookup(StirlingKind::S1, n, k, Rat(0)); }
Rat stirling2(int n, int k) { return lookup(StirlingKind::S2, n, k, Rat(0)); }
Rat deg_stirling1(int n, int k, const Rat& lambda) { return lookup(StirlingKind::S1deg, n, k, lambda); }
Rat deg_stirling2(int n, int k, const Rat& lambda) { return lookup(StirlingKind::S2deg, n, k, lambda); }

Poly bell_poly(int n) {
    if (n < 0) throw DomainError("bell_poly: n must be nonnegative");
    return Poly(Var::X, stirling_table(StirlingKind::S2, Rat(0), std::max(16, n))->row(n));
}

Poly deg_bell_poly(int n, const Rat& lambda) {
    if (n < 0) throw DomainError("deg_bell_poly: n must be nonnegative");
    return Poly(Var::X, stirling_table(StirlingKind::S2deg, lambda, std::max(16, n))->row(n));
}

std::string to_string(StirlingKind kind) {
    switch (kind) {
    case StirlingKind::S1: return "S1";
    case StirlingKind::S2: return "S2";
    case StirlingKind::S1deg: return "S1deg";
    case StirlingKind::S2deg: return "S2deg";
    }
    return "?";
}

} // namespace degen
