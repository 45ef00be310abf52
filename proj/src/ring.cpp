#include "sullivan/ring.hpp"

#include "sullivan/errors.hpp"

#include <algorithm>
#include <set>

namespace sullivan {

int koszul_sign(const std::vector<int>& left, const std::vector<int>& right, const std::vector<int>& degrees) {
    int swaps = 0;
    int odd_after = 0;  // odd factors of `left` with index greater than the current one
    for (std::size_t i = 0; i < left.size(); ++i)
        if (degrees[i] % 2 != 0 && left[i] > 0) ++odd_after;
    for (std::size_t v = 0; v < right.size(); ++v) {
        if (degrees[v] % 2 != 0 && left[v] > 0) --odd_after;
        if (degrees[v] % 2 == 0 || right[v] == 0) continue;
        if (left[v] > 0) return 0;
        swaps += odd_after;
    }
    return swaps % 2 == 0 ? 1 : -1;
}

namespace {

SparseVector normalized(SparseVector v) {
    std::map<std::size_t, Rational> acc;
    for (auto& [i, c] : v) acc[i] += c;
    SparseVector out;
    for (auto& [i, c] : acc)
        if (sgn(c) != 0) out.emplace_back(i, c);
    return out;
}

bool divides(const std::vector<int>& small, const std::vector<int>& big) {
    for (std::size_t i = 0; i < small.size(); ++i)
        if (small[i] > big[i]) return false;
    return true;
}

std::string monomial_name(const std::vector<int>& exps, const std::vector<std::pair<std::string, int>>& gens) {
    std::string s;
    for (std::size_t i = 0; i < exps.size(); ++i) {
        if (exps[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += gens[i].first;
        if (exps[i] > 1) s += "^" + std::to_string(exps[i]);
    }
    return s.empty() ? "1" : s;
}

}  // namespace

RingPtr FiniteGradedRing::trivial() {
    static const RingPtr ring = [] {
        auto* r = new FiniteGradedRing();
        r->basis_.push_back({"1", 0});
        r->table_.push_back({{0, Rational(1)}});
        r->finish();
        return RingPtr(r);
    }();
    return ring;
}

void FiniteGradedRing::finish() {
    by_degree_.clear();
    top_ = 0;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        by_degree_[basis_[i].degree].push_back(i);
        top_ = std::max(top_, basis_[i].degree);
    }
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (!symbols_.count(basis_[i].name)) symbols_[basis_[i].name] = i;
}

const std::vector<std::size_t>& FiniteGradedRing::indices_of_degree(int k) const {
    static const std::vector<std::size_t> empty;
    auto it = by_degree_.find(k);
    return it == by_degree_.end() ? empty : it->second;
}

RingPtr FiniteGradedRing::from_table(const std::vector<BasisElement>& basis, const ProductTable& products) {
    std::shared_ptr<FiniteGradedRing> r(new FiniteGradedRing());
    r->basis_.push_back({"1", 0});
    std::set<std::string> names{"1"};
    for (const auto& b : basis) {
        if (b.degree < 1) throw PreconditionError("ring basis element '" + b.name + "' must have positive degree");
        if (!names.insert(b.name).second) throw PreconditionError("duplicate ring basis name '" + b.name + "'");
        r->basis_.push_back(b);
    }
    const std::size_t n = r->basis_.size();
    std::vector<std::optional<SparseVector>> table(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        table[i] = SparseVector{{i, Rational(1)}};
        table[i * n] = SparseVector{{i, Rational(1)}};
    }
    auto check_degrees = [&](std::size_t i, std::size_t j, const SparseVector& v) {
        for (const auto& [k, c] : v)
            if (r->basis_[k].degree != r->basis_[i].degree + r->basis_[j].degree)
                throw DegreeMismatch("product " + r->basis_[i].name + "*" + r->basis_[j].name +
                                     " has a term of the wrong degree");
    };
    for (const auto& [key, value] : products) {
        auto [i, j] = key;
        if (i >= n || j >= n) throw PreconditionError("product index out of range");
        SparseVector v = normalized(value);
        check_degrees(i, j, v);
        auto& slot = table[i * n + j];
        if (slot && *slot != v) throw ValidationError("conflicting products for " + r->basis_[i].name + "*" + r->basis_[j].name);
        slot = v;
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            auto& a = table[i * n + j];
            auto& b = table[j * n + i];
            const bool odd = (r->basis_[i].degree % 2 != 0) && (r->basis_[j].degree % 2 != 0);
            if (a && !b) {
                SparseVector t = *a;
                if (odd)
                    for (auto& term : t) term.second = -term.second;
                b = t;
            }
        }
    }
    r->table_.resize(n * n);
    for (std::size_t idx = 0; idx < n * n; ++idx) r->table_[idx] = table[idx].value_or(SparseVector{});
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            SparseVector ab = r->product(i, j);
            SparseVector ba = r->product(j, i);
            if (r->basis_[i].degree % 2 != 0 && r->basis_[j].degree % 2 != 0)
                for (auto& t : ba) t.second = -t.second;
            if (ab != ba)
                throw ValidationError("product " + r->basis_[i].name + "*" + r->basis_[j].name +
                                      " is not graded-commutative");
        }
    }
    r->finish();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                Vector x(n), y(n), z(n);
                x[i] = 1;
                y[j] = 1;
                z[k] = 1;
                if (r->multiply(r->multiply(x, y), z) != r->multiply(x, r->multiply(y, z)))
                    throw ValidationError("product is not associative on " + r->basis_[i].name + ", " +
                                          r->basis_[j].name + ", " + r->basis_[k].name);
            }
        }
    }
    return r;
}

RingPtr FiniteGradedRing::from_monomial_relations(const std::vector<std::pair<std::string, int>>& generators,
                                                  const std::vector<std::vector<int>>& relations) {
    if (generators.empty()) throw PreconditionError("a monomial ring needs at least one generator");
    std::vector<int> degrees;
    std::set<std::string> names;
    for (const auto& [name, degree] : generators) {
        if (degree < 1) throw PreconditionError("generator '" + name + "' must have positive degree");
        if (name == "1" || !names.insert(name).second) throw PreconditionError("duplicate generator name '" + name + "'");
        degrees.push_back(degree);
    }
    const std::size_t g = generators.size();
    for (const auto& rel : relations)
        if (rel.size() != g) throw PreconditionError("relation has the wrong number of exponents");

    std::vector<int> bound(g);
    for (std::size_t i = 0; i < g; ++i) {
        if (degrees[i] % 2 != 0) {
            bound[i] = 1;
            continue;
        }
        int best = -1;
        for (const auto& rel : relations) {
            bool pure = rel[i] > 0;
            for (std::size_t j = 0; j < g && pure; ++j)
                if (j != i && rel[j] != 0) pure = false;
            if (pure && (best < 0 || rel[i] - 1 < best)) best = rel[i] - 1;
        }
        if (best < 0)
            throw PreconditionError("even generator '" + generators[i].first +
                                    "' needs a relation of the form " + generators[i].first + "^k");
        bound[i] = best;
    }

    std::vector<std::vector<int>> monomials;
    std::vector<int> current(g, 0);
    auto enumerate = [&](auto&& self, std::size_t pos) -> void {
        if (pos == g) {
            for (const auto& rel : relations)
                if (divides(rel, current)) return;
            monomials.push_back(current);
            return;
        }
        for (int e = bound[pos]; e >= 0; --e) {
            current[pos] = e;
            self(self, pos + 1);
        }
        current[pos] = 0;
    };
    enumerate(enumerate, 0);
    auto degree_of = [&](const std::vector<int>& m) {
        int d = 0;
        for (std::size_t i = 0; i < g; ++i) d += m[i] * degrees[i];
        return d;
    };
    std::stable_sort(monomials.begin(), monomials.end(), [&](const auto& a, const auto& b) {
        const int da = degree_of(a), db = degree_of(b);
        if (da != db) return da < db;
        return a > b;
    });

    std::shared_ptr<FiniteGradedRing> r(new FiniteGradedRing());
    r->generators_ = generators;
    r->relations_ = relations;
    std::map<std::vector<int>, std::size_t> index;
    for (const auto& m : monomials) {
        index[m] = r->basis_.size();
        r->basis_.push_back({monomial_name(m, generators), degree_of(m)});
    }
    const std::size_t n = r->basis_.size();
    r->table_.assign(n * n, {});
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const int sign = koszul_sign(monomials[i], monomials[j], degrees);
            if (sign == 0) continue;
            std::vector<int> prod(g);
            for (std::size_t k = 0; k < g; ++k) prod[k] = monomials[i][k] + monomials[j][k];
            auto it = index.find(prod);
            if (it == index.end()) continue;
            r->table_[i * n + j] = {{it->second, Rational(sign)}};
        }
    }
    for (std::size_t i = 0; i < g; ++i) {
        std::vector<int> e(g, 0);
        e[i] = 1;
        auto it = index.find(e);
        r->symbols_[generators[i].first] =
            it == index.end() ? std::nullopt : std::optional<std::size_t>(it->second);
    }
    r->finish();
    return r;
}

bool FiniteGradedRing::has_integral_constants() const {
    for (const auto& entry : table_)
        for (const auto& [k, c] : entry)
            if (!is_integral(c)) return false;
    return true;
}

RingPtr FiniteGradedRing::with_omega(const Vector& omega, int n) const {
    if (omega.size() != size()) throw PreconditionError("omega has the wrong length");
    for (std::size_t i = 0; i < size(); ++i)
        if (sgn(omega[i]) != 0 && degree(i) != 2) throw DegreeMismatch("omega must have degree 2");
    if (n < 0) throw PreconditionError("n must be nonnegative");
    auto copy = std::shared_ptr<FiniteGradedRing>(new FiniteGradedRing(*this));
    copy->omega_ = omega;
    copy->n_ = n;
    return copy;
}

Vector FiniteGradedRing::multiply(const Vector& x, const Vector& y) const {
    Vector out(size());
    for (std::size_t i = 0; i < size(); ++i) {
        if (sgn(x[i]) == 0) continue;
        for (std::size_t j = 0; j < size(); ++j) {
            if (sgn(y[j]) == 0) continue;
            const Rational c = x[i] * y[j];
            for (const auto& [k, s] : product(i, j)) out[k] += c * s;
        }
    }
    return out;
}

}  // namespace sullivan
