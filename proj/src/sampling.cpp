#include <dwpf/sampling.hpp>

#include <set>

namespace dwpf {

Rational RationalSampler::positive_rational() {
    long num = 1 + static_cast<long>(gen_() % 50);
    long den = 1 + static_cast<long>(gen_() % 20);
    return make_rational(num, den);
}

std::uint64_t RationalSampler::index(std::uint64_t bound) {
    return gen_() % bound;
}

RapidityPoint RationalSampler::rapidity_point(int n) {
    for (;;) {
        RapidityPoint p;
        for (int i = 0; i < n; ++i) p.s.push_back(positive_rational());
        for (int j = 0; j < n; ++j) p.t.push_back(positive_rational());
        p.r = positive_rational();
        const Rational q = p.q();
        if (q == 1) continue;
        std::set<Rational> us, vs;
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) ok = us.insert(p.u(i)).second;
        for (int j = 0; j < n && ok; ++j) ok = vs.insert(p.v(j)).second;
        for (int i = 0; i < n && ok; ++i)
            for (int j = 0; j < n && ok; ++j)
                ok = p.u(i) != p.v(j) && q * p.u(i) != p.v(j);
        if (ok) return p;
    }
}

}  // namespace dwpf
