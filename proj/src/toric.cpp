#include "hsq/toric.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <sstream>

#include "hsq/errors.hpp"
#include "hsq/prime_field.hpp"

namespace hsq {

namespace {

using Mask = std::uint64_t;

std::vector<int> mask_to_indices(Mask m, int n) {
    std::vector<int> out;
    for (int j = 0; j < n; ++j)
        if (m >> j & 1) out.push_back(j);
    return out;
}

// Cached rational ranks of column subsets of a fixed matrix.
class ColumnRanks {
public:
    explicit ColumnRanks(const IntMatrix& a) : a_(a) {}

    int rank(Mask mask) {
        auto it = cache_.find(mask);
        if (it != cache_.end()) return it->second;
        const int d = static_cast<int>(a_.size());
        const int n = d ? static_cast<int>(a_[0].size()) : 0;
        IntMatrix sub(static_cast<size_t>(d));
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < n; ++j)
                if (mask >> j & 1) sub[static_cast<size_t>(i)].push_back(a_[static_cast<size_t>(i)][static_cast<size_t>(j)]);
        const int r = int_rank(sub);
        cache_.emplace(mask, r);
        return r;
    }

private:
    const IntMatrix& a_;
    std::map<Mask, int> cache_;
};

// The spans of the rank-(d-1) flats cover the span of every lower flat, so
// genericity only needs to be tested against these.
std::vector<const Flat*> coatom_flats(const FlatLattice& lattice) {
    std::vector<const Flat*> out;
    for (const auto& f : lattice.flats())
        if (f.rank == lattice.ambient_rank() - 1) out.push_back(&f);
    return out;
}

} // namespace

ToricInstance::ToricInstance(IntMatrix m, std::optional<std::vector<BigRat>> level)
    : matrix(std::move(m)), xi(std::move(level)) {
    if (matrix.empty() || matrix[0].empty())
        throw validation_error("toric matrix must be nonempty");
    for (const auto& row : matrix)
        if (row.size() != matrix[0].size())
            throw validation_error("toric matrix rows have unequal lengths");
    if (cols() < rows())
        throw validation_error("toric matrix needs at least as many columns as rows");
    if (cols() > 62)
        throw validation_error("toric matrix too wide; supported scale is a dozen columns");
    if (int_rank(matrix) != rows())
        throw validation_error("toric matrix must have full row rank");
    if (xi && static_cast<int>(xi->size()) != rows())
        throw validation_error("xi length must equal the number of matrix rows");
}

FlatLattice::FlatLattice(const ToricInstance& inst) {
    const int d = inst.rows();
    const int n = inst.cols();
    ambient_rank_ = d;
    ColumnRanks ranks(inst.matrix);

    auto closure = [&](Mask m) {
        const int r = ranks.rank(m);
        Mask closed = m;
        for (int j = 0; j < n; ++j) {
            const Mask bit = Mask{1} << j;
            if (!(closed & bit) && ranks.rank(m | bit) == r) closed |= bit;
        }
        return closed;
    };

    std::map<Mask, int> flat_rank;
    std::deque<Mask> queue;
    const Mask bottom = closure(0);
    flat_rank.emplace(bottom, ranks.rank(bottom));
    queue.push_back(bottom);
    while (!queue.empty()) {
        const Mask f = queue.front();
        queue.pop_front();
        for (int e = 0; e < n; ++e) {
            const Mask bit = Mask{1} << e;
            if (f & bit) continue;
            const Mask g = closure(f | bit);
            if (flat_rank.emplace(g, ranks.rank(g)).second) queue.push_back(g);
        }
    }

    // Mobius values toward the origin flat (the unique one of rank d),
    // recursed in order of decreasing rank.  Proper superset flats have
    // strictly larger rank, so the running sums below are complete.
    std::vector<std::pair<Mask, int>> order(flat_rank.begin(), flat_rank.end());
    std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
        return a.second != b.second ? a.second > b.second : a.first < b.first;
    });
    std::map<Mask, BigInt> mobius;
    for (const auto& [mask, rank] : order) {
        if (rank == d) {
            mobius.emplace(mask, 1);
            continue;
        }
        BigInt upper = 0;
        for (const auto& [gmask, grank] : order) {
            if (grank <= rank) break;
            if ((gmask & mask) == mask) upper += mobius.at(gmask);
        }
        mobius.emplace(mask, -upper);
    }

    std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
        return a.second != b.second ? a.second < b.second : a.first < b.first;
    });
    for (const auto& [mask, rank] : order) {
        Flat f;
        f.indices = mask_to_indices(mask, n);
        f.rank = rank;
        f.mobius_to_top = mobius.at(mask);
        flats_.push_back(std::move(f));
    }
    if (flats_.empty() || flats_.back().rank != d)
        throw internal_error("flat lattice missing its origin flat");
}

FlatLattice build_flat_lattice(const ToricInstance& inst) { return FlatLattice(inst); }

LaurentPolynomial toric_count_polynomial(const ToricInstance& inst) {
    const FlatLattice lattice(inst);
    const int d = inst.rows();
    const int n = inst.cols();
    LaurentPolynomial sum(Var::q);
    for (const auto& f : lattice.flats())
        sum += LaurentPolynomial::monomial(Var::q, f.size(), f.mobius_to_top);
    const LaurentPolynomial q_minus_1 =
        LaurentPolynomial::monomial(Var::q, 1) - LaurentPolynomial::one(Var::q);
    return exact_divide(sum.shifted(n - d), pow(q_minus_1, static_cast<unsigned>(d)));
}

LaurentPolynomial toric_poincare(const ToricInstance& inst) {
    const int shift = 4 * (inst.cols() - inst.rows());
    const LaurentPolynomial p =
        toric_count_polynomial(inst).substitute_power(Var::t, -2).shifted(shift);
    for (const auto& [e, c] : p.terms())
        if (e < 0 || e % 2 != 0 || c < 0)
            throw internal_error("Poincare polynomial failed positivity check: " + p.to_string());
    return p;
}

Matroid gale_dual(const ToricInstance& inst) {
    return Matroid(int_kernel_basis(inst.matrix, inst.cols()), inst.cols());
}

Matroid::Matroid(IntMatrix realization, int ground_size)
    : realization_(std::move(realization)), ground_size_(ground_size) {
    if (ground_size < 0 || ground_size > 62)
        throw validation_error("matroid ground set size out of range");
    for (const auto& row : realization_)
        if (static_cast<int>(row.size()) != ground_size)
            throw validation_error("matroid realization width disagrees with ground size");
}

int Matroid::rank() const {
    return ground_size_ == 0 ? 0 : rank_of_mask((Mask{1} << ground_size_) - 1);
}

int Matroid::rank_of(const std::vector<int>& subset) const {
    Mask mask = 0;
    for (int e : subset) {
        if (e < 0 || e >= ground_size_)
            throw validation_error("matroid element index out of range");
        mask |= Mask{1} << e;
    }
    return rank_of_mask(mask);
}

int Matroid::rank_of_mask(std::uint64_t mask) const {
    auto it = rank_cache_.find(mask);
    if (it != rank_cache_.end()) return it->second;
    IntMatrix sub(realization_.size());
    for (size_t i = 0; i < realization_.size(); ++i)
        for (int j = 0; j < ground_size_; ++j)
            if (mask >> j & 1) sub[i].push_back(realization_[i][static_cast<size_t>(j)]);
    const int r = int_rank(sub);
    rank_cache_.emplace(mask, r);
    return r;
}

TuttePolynomial TuttePolynomial::one() {
    TuttePolynomial t;
    t.terms_[{0, 0}] = 1;
    return t;
}

BigInt TuttePolynomial::coeff(int x_exp, int y_exp) const {
    auto it = terms_.find({x_exp, y_exp});
    return it == terms_.end() ? BigInt(0) : it->second;
}

TuttePolynomial TuttePolynomial::operator+(const TuttePolynomial& other) const {
    TuttePolynomial r = *this;
    for (const auto& [e, c] : other.terms_) r.set_coeff(e.first, e.second, r.coeff(e.first, e.second) + c);
    return r;
}

TuttePolynomial TuttePolynomial::times_x() const {
    TuttePolynomial r;
    for (const auto& [e, c] : terms_) r.terms_[{e.first + 1, e.second}] = c;
    return r;
}

TuttePolynomial TuttePolynomial::times_y() const {
    TuttePolynomial r;
    for (const auto& [e, c] : terms_) r.terms_[{e.first, e.second + 1}] = c;
    return r;
}

BigInt TuttePolynomial::evaluate_at_integers(const BigInt& x, const BigInt& y) const {
    BigInt sum = 0;
    for (const auto& [e, c] : terms_)
        sum += c * big_pow(x, static_cast<unsigned>(e.first)) * big_pow(y, static_cast<unsigned>(e.second));
    return sum;
}

std::string TuttePolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) out << " + ";
        first = false;
        const bool has_var = e.first > 0 || e.second > 0;
        if (!has_var || c != 1) out << c.str() << (has_var ? "*" : "");
        if (e.first > 0) out << "x^" << e.first << (e.second > 0 ? "*" : "");
        if (e.second > 0) out << "y^" << e.second;
    }
    return out.str();
}

void TuttePolynomial::set_coeff(int x_exp, int y_exp, BigInt c) {
    if (c == 0)
        terms_.erase({x_exp, y_exp});
    else
        terms_[{x_exp, y_exp}] = std::move(c);
}

// Deletion-contraction on minors of the original matroid.  A minor is the
// pair (remaining, contracted); its rank function only needs rank queries
// on the original ground set, so realizations never get rewritten.
class TutteContext {
public:
    TutteContext(const Matroid& m, std::vector<int> order)
        : m_(m), order_(std::move(order)) {}

    TuttePolynomial run() {
        Mask full = 0;
        for (int e : order_) full |= Mask{1} << e;
        return compute(full, 0);
    }

private:
    int minor_rank(Mask subset, Mask contracted) const {
        return m_.rank_of_mask(subset | contracted) - m_.rank_of_mask(contracted);
    }

    TuttePolynomial compute(Mask remaining, Mask contracted) {
        if (remaining == 0) return TuttePolynomial::one();
        const auto key = std::make_pair(remaining, contracted);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;

        int e = -1;
        for (int cand : order_)
            if (remaining >> cand & 1) {
                e = cand;
                break;
            }
        const Mask bit = Mask{1} << e;
        const Mask rest = remaining & ~bit;

        TuttePolynomial result;
        if (minor_rank(bit, contracted) == 0)
            result = compute(rest, contracted).times_y();
        else if (minor_rank(remaining, contracted) - minor_rank(rest, contracted) == 1)
            result = compute(rest, contracted | bit).times_x();
        else
            result = compute(rest, contracted) + compute(rest, contracted | bit);
        memo_.emplace(key, result);
        return result;
    }

    const Matroid& m_;
    std::vector<int> order_;
    std::map<std::pair<Mask, Mask>, TuttePolynomial> memo_;
};

TuttePolynomial tutte_polynomial(const Matroid& m) {
    std::vector<int> order(static_cast<size_t>(m.ground_size()));
    for (int i = 0; i < m.ground_size(); ++i) order[static_cast<size_t>(i)] = i;
    return tutte_polynomial(m, order);
}

TuttePolynomial tutte_polynomial(const Matroid& m, const std::vector<int>& element_order) {
    std::vector<bool> seen(static_cast<size_t>(m.ground_size()), false);
    if (static_cast<int>(element_order.size()) != m.ground_size())
        throw validation_error("element order must list every matroid element once");
    for (int e : element_order) {
        if (e < 0 || e >= m.ground_size() || seen[static_cast<size_t>(e)])
            throw validation_error("element order must list every matroid element once");
        seen[static_cast<size_t>(e)] = true;
    }
    return TutteContext(m, element_order).run();
}

LaurentPolynomial h_polynomial(const Matroid& m) {
    const TuttePolynomial t = tutte_polynomial(m);
    const int r = m.rank();
    LaurentPolynomial h(Var::q);
    for (const auto& [e, c] : t.terms())
        h += LaurentPolynomial::monomial(Var::q, r - e.first, c);
    return h;
}

bool xi_is_generic(const ToricInstance& inst) {
    if (!inst.xi)
        throw validation_error("genericity check requires xi");
    const FlatLattice lattice(inst);
    const int d = inst.rows();
    for (const Flat* f : coatom_flats(lattice)) {
        RatMatrix m(static_cast<size_t>(d));
        for (int i = 0; i < d; ++i) {
            for (int j : f->indices)
                m[static_cast<size_t>(i)].emplace_back(inst.matrix[static_cast<size_t>(i)][static_cast<size_t>(j)]);
            m[static_cast<size_t>(i)].push_back((*inst.xi)[static_cast<size_t>(i)]);
        }
        if (rat_rank(std::move(m)) == f->rank) return false;
    }
    return true;
}

bool xi_is_generic_mod_p(const ToricInstance& inst, const FlatLattice& lattice,
                         const std::vector<std::int64_t>& xi, std::int64_t p) {
    const int d = inst.rows();
    if (static_cast<int>(xi.size()) != d)
        throw validation_error("xi length must equal the number of matrix rows");
    for (const Flat* f : coatom_flats(lattice)) {
        FpMatrix cols(static_cast<size_t>(d));
        FpMatrix augmented(static_cast<size_t>(d));
        for (int i = 0; i < d; ++i) {
            for (int j : f->indices) {
                const std::int64_t e =
                    reduce_mod(inst.matrix[static_cast<size_t>(i)][static_cast<size_t>(j)], p);
                cols[static_cast<size_t>(i)].push_back(e);
                augmented[static_cast<size_t>(i)].push_back(e);
            }
            augmented[static_cast<size_t>(i)].push_back(xi[static_cast<size_t>(i)]);
        }
        if (fp_rank(std::move(augmented), p) == fp_rank(std::move(cols), p)) return false;
    }
    return true;
}

std::optional<std::vector<std::int64_t>>
find_generic_xi_mod_p(const ToricInstance& inst, const FlatLattice& lattice, std::int64_t p) {
    const int d = inst.rows();
    std::vector<std::int64_t> xi(static_cast<size_t>(d), 0);
    while (true) {
        int i = d - 1;
        while (i >= 0 && xi[static_cast<size_t>(i)] == p - 1) {
            xi[static_cast<size_t>(i)] = 0;
            --i;
        }
        if (i < 0) return std::nullopt;
        ++xi[static_cast<size_t>(i)];
        if (xi_is_generic_mod_p(inst, lattice, xi, p)) return xi;
    }
}

} // namespace hsq
