#include <dwpf/fock.hpp>

#include <dwpf/sampling.hpp>
#include <dwpf/symmetric.hpp>

#include <algorithm>
#include <stdexcept>

namespace dwpf {

namespace {

// membership in a strictly decreasing vector
bool contains(const std::vector<int>& sorted_desc, int x) {
    auto it = std::lower_bound(sorted_desc.begin(), sorted_desc.end(), x, std::greater<int>());
    return it != sorted_desc.end() && *it == x;
}

void insert_desc(std::vector<int>& sorted_desc, int x) {
    auto it = std::lower_bound(sorted_desc.begin(), sorted_desc.end(), x, std::greater<int>());
    sorted_desc.insert(it, x);
}

void erase_desc(std::vector<int>& sorted_desc, int x) {
    auto it = std::lower_bound(sorted_desc.begin(), sorted_desc.end(), x, std::greater<int>());
    sorted_desc.erase(it);
}

long count_greater(const std::vector<int>& sorted_desc, int x) {
    auto it = std::lower_bound(sorted_desc.begin(), sorted_desc.end(), x, std::greater<int>());
    return it - sorted_desc.begin();
}

}  // namespace

bool MayaState::occupied(int mode) const {
    if (mode >= 0) return contains(added, mode);
    return !contains(removed, mode);
}

int MayaState::charge() const {
    return static_cast<int>(added.size()) - static_cast<int>(removed.size());
}

long MayaState::energy() const {
    long e = 0;
    for (int m : added) e += m;
    for (int r : removed) e -= r;  // hole at -b costs b
    return e;
}

long MayaState::occupied_above(int mode) const {
    long count = count_greater(added, mode);
    if (mode < -1)
        count += (-1L - mode) - count_greater(removed, mode);  // sea modes in (mode, -1]
    return count;
}

FockVector FockVector::basis(MayaState s, Rational coeff) {
    FockVector v;
    v.add(s, coeff);
    return v;
}

Rational FockVector::coefficient(const MayaState& s) const {
    auto it = terms_.find(s);
    return it == terms_.end() ? Rational(0) : it->second;
}

void FockVector::add(const MayaState& s, const Rational& coeff) {
    if (sgn(coeff) == 0) return;
    auto [it, inserted] = terms_.emplace(s, coeff);
    if (!inserted) {
        it->second += coeff;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

FockVector& FockVector::operator+=(const FockVector& o) {
    for (const auto& [s, c] : o.terms_) add(s, c);
    return *this;
}

FockVector& FockVector::operator-=(const FockVector& o) {
    for (const auto& [s, c] : o.terms_) add(s, -c);
    return *this;
}

FockVector& FockVector::operator*=(const Rational& c) {
    if (sgn(c) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [s, coeff] : terms_) coeff *= c;
    return *this;
}

long FockVector::max_energy() const {
    long e = -1;
    for (const auto& [s, c] : terms_) e = std::max(e, s.energy());
    return e;
}

FockVector apply_psi(int n, const FockVector& v) {
    FockVector out;
    for (const auto& [s, c] : v.terms()) {
        if (s.occupied(n)) continue;  // annihilated
        MayaState ns = s;
        if (n >= 0)
            insert_desc(ns.added, n);
        else
            erase_desc(ns.removed, n);  // unoccupied negative mode was a hole
        Rational coeff = (s.occupied_above(n) % 2 == 0) ? c : -c;
        out.add(ns, coeff);
    }
    return out;
}

FockVector apply_psi_star(int n, const FockVector& v) {
    FockVector out;
    for (const auto& [s, c] : v.terms()) {
        if (!s.occupied(n)) continue;
        MayaState ns = s;
        if (n >= 0)
            erase_desc(ns.added, n);
        else
            insert_desc(ns.removed, n);
        Rational coeff = (s.occupied_above(n) % 2 == 0) ? c : -c;
        out.add(ns, coeff);
    }
    return out;
}

namespace {

// One hop psi_target psi*_source on a basis state; source must be occupied
// and target unoccupied.
void add_hop(FockVector& out, const MayaState& s, const Rational& c, int source, int target) {
    MayaState mid = s;
    Rational coeff = (s.occupied_above(source) % 2 == 0) ? c : -c;
    if (source >= 0)
        erase_desc(mid.added, source);
    else
        insert_desc(mid.removed, source);
    if (mid.occupied_above(target) % 2 != 0) coeff = -coeff;
    if (target >= 0)
        insert_desc(mid.added, target);
    else
        erase_desc(mid.removed, target);
    out.add(mid, coeff);
}

}  // namespace

FockVector apply_Hm(int m, const FockVector& v) {
    FockVector out;
    if (m == 0) {
        // sum_j :psi_j psi*_j: counts particles minus holes
        for (const auto& [s, c] : v.terms()) out.add(s, c * s.charge());
        return out;
    }
    for (const auto& [s, c] : v.terms()) {
        // sources p occupied with p - m unoccupied
        if (m > 0) {
            for (int p : s.added)
                if (!s.occupied(p - m)) add_hop(out, s, c, p, p - m);
            for (int r : s.removed) {
                int p = r + m;
                if (p < 0 && !contains(s.removed, p)) add_hop(out, s, c, p, r);
            }
        } else {
            const int up = -m;
            for (int p : s.added)
                if (!s.occupied(p + up)) add_hop(out, s, c, p, p + up);
            for (int r : s.removed) {
                int p = r - up;  // sea mode below an existing hole
                if (!contains(s.removed, p)) add_hop(out, s, c, p, r);
            }
            for (int p = -up; p <= -1; ++p) {
                // sea modes whose lift crosses zero
                if (contains(s.removed, p)) continue;
                int t = p + up;
                if (t >= 0 && !contains(s.added, t)) add_hop(out, s, c, p, t);
            }
        }
    }
    return out;
}

namespace {

// all partitions of e with parts <= max_part, as multiplicity-exponent rows
void partitions_of(int e, int max_part, std::vector<int>& cur,
                   std::vector<std::vector<int>>& out, int vars) {
    if (e == 0) {
        out.push_back(cur);
        return;
    }
    for (int part = std::min(e, max_part); part >= 1; --part) {
        ++cur[part - 1];
        partitions_of(e - part, part, cur, out, vars);
        --cur[part - 1];
    }
}

}  // namespace

const TPoly& FockPairing::phi(const MayaState& s) {
    auto it = memo_.find(s);
    if (it != memo_.end()) return it->second;

    const long e = s.energy();
    TPoly result(t_count_);
    if (s.is_vacuum()) {
        result = TPoly::constant(t_count_, Rational(1));
    } else if (e > 0) {
        if (e > t_count_)
            throw std::invalid_argument("FockPairing: state energy exceeds t_count");
        // H_m images once per m, then one coefficient per monomial via
        // k_m c_kappa(s) = c_{kappa - e_m}(H_m s), m = largest part of kappa
        std::vector<FockVector> images(e + 1);
        for (int m = 1; m <= e; ++m) images[m] = apply_Hm(m, FockVector::basis(s));
        std::vector<std::vector<int>> kappas;
        std::vector<int> cur(t_count_, 0);
        partitions_of(static_cast<int>(e), static_cast<int>(e), cur, kappas, t_count_);
        for (auto& kappa : kappas) {
            int m = 0;
            for (int i = t_count_ - 1; i >= 0; --i)
                if (kappa[i] > 0) {
                    m = i + 1;
                    break;
                }
            std::vector<int> rest = kappa;
            --rest[m - 1];
            Rational acc(0);
            for (const auto& [child, w] : images[m].terms())
                acc += w * phi(child).coefficient(rest);
            if (sgn(acc) != 0) result.add_term(kappa, acc / kappa[m - 1]);
        }
    }
    // energy 0 with charge 0 happens only at the vacuum; other energy-0
    // states (nonzero charge) pair to zero and are filtered by the caller
    return memo_.emplace(s, std::move(result)).first->second;
}

TPoly FockPairing::vacuum_pairing(const FockVector& v) {
    TPoly acc(t_count_);
    for (const auto& [s, c] : v.terms()) {
        if (s.charge() != 0)
            throw std::domain_error("vacuum_pairing: component with nonzero charge");
        acc += phi(s) * c;
    }
    return acc;
}

FockVector lambda_ordered_state(const Partition& lambda) {
    const FrobeniusData f = frobenius(lambda);
    FockVector v = FockVector::vacuum();
    // rightmost operator acts first: psi_{a_1}, ..., psi_{a_d},
    // then psi*_{-b_d}, ..., psi*_{-b_1}
    for (int i = 0; i < f.d; ++i) v = apply_psi(f.m[i], v);
    for (int i = f.d - 1; i >= 0; --i) v = apply_psi_star(-(f.n[i] + 1), v);
    return v;
}

Partition partition_of_state(const MayaState& s) {
    if (s.charge() != 0) throw std::domain_error("partition_of_state: nonzero charge");
    std::vector<int> a = s.added;                      // already strictly decreasing
    std::vector<int> b;
    for (auto it = s.removed.rbegin(); it != s.removed.rend(); ++it) b.push_back(-*it);
    return partition_from_hooks(a, b);
}

FockVector BilinearOperator::apply(const FockVector& v) const {
    const FockVector lowered = apply_psi(a, v);
    FockVector out;
    for (const auto& [coeff, b] : terms) {
        FockVector term = apply_psi_star(-b, lowered);
        term *= coeff;
        out += term;
    }
    return out;
}

BilinearOperator x_operator(int a, int n, const CoefficientTable& table) {
    if (a < 0 || a > n - 2) throw std::domain_error("x_operator: need 0 <= a <= N-2");
    BilinearOperator op;
    op.a = a;
    for (int b = 1; b <= n; ++b) {
        Rational coeff = table.d(hook_partition(a, b));
        if (b % 2 != 0) coeff = -coeff;
        op.terms.emplace_back(coeff, b);
    }
    return op;
}

FockVector product_state(int n, const CoefficientTable& table) {
    FockVector v = FockVector::vacuum();
    for (int a = n - 2; a >= 0; --a) {
        // e^{X_a} = 1 + X_a by nilpotency
        v += x_operator(a, n, table).apply(v);
    }
    return v;
}

TPoly f_free(int n, const CoefficientTable& table, FockPairing& pairing) {
    if (table.n() != n) throw std::invalid_argument("f_free: table built for a different N");
    return pairing.vacuum_pairing(product_state(n, table));
}

TPoly f_free(int n, const CoefficientTable& table, int t_count) {
    FockPairing pairing(t_count);
    return f_free(n, table, pairing);
}

MainIdentityReport verify_main(int n, std::uint64_t seed, int restricted_points,
                               bool check_poly) {
    RationalSampler sampler(seed);
    const RapidityPoint base = sampler.rapidity_point(n);
    std::vector<Rational> v;
    for (int j = 0; j < n; ++j) v.push_back(base.v(j));
    const CoefficientTable table(n, v, base.q());
    const int t_count = n * (n - 1);
    const TPoly f = f_free(n, table, t_count);

    MainIdentityReport rep;
    if (check_poly) {
        rep.poly_checked = true;
        rep.poly_identity = (f * table.c_phi() == z_free(n, v, base.q()));
    }
    rep.restricted_points = restricted_points;
    rep.restricted = true;
    for (int k = 0; k < restricted_points; ++k) {
        RapidityPoint p = base;
        for (int i = 0; i < n; ++i) p.s[i] = sampler.positive_rational();
        std::vector<Rational> u;
        for (int i = 0; i < n; ++i) u.push_back(p.u(i));
        Rational lhs = kappa_closed_form(p) * c_prefactor(p) * table.c_phi() *
                       restrict_to_power_sums(f, u);
        rep.restricted = rep.restricted && lhs == z_bruteforce(p);
    }
    return rep;
}

}  // namespace dwpf
