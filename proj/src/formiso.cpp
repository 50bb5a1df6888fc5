#include <numeric>
#include <algorithm>
#include <functional>

#include "pairlat/lattice.hpp"

namespace pairlat {

namespace {

using Elem = FiniteQuadraticForm::Elem;

Elem scale(const FiniteQuadraticForm& f, const Elem& x, long long k) {
    Elem y(x.size());
    for (size_t i = 0; i < x.size(); ++i) {
        long long m = (long long)f.orders[i];
        y[i] = ((x[i] * (k % m)) % m + m) % m;
    }
    return y;
}

Elem add(const FiniteQuadraticForm& f, const Elem& x, const Elem& y) {
    Elem z(x.size());
    for (size_t i = 0; i < x.size(); ++i) z[i] = (x[i] + y[i]) % (long long)f.orders[i];
    return z;
}

long long elem_order(const FiniteQuadraticForm& f, const Elem& x) {
    long long o = 1;
    for (size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        long long m = (long long)f.orders[i];
        long long g = std::gcd(x[i], m);
        o = std::lcm(o, m / g);
    }
    return o;
}

// maps generator-by-generator, pruning on order, q and b; bijectivity is
// certified at the end by the size of the generated image
long long search(const FiniteQuadraticForm& a, const FiniteQuadraticForm& b, long long budget,
                 bool count_all,
                 std::vector<std::vector<Elem>>* collect = nullptr) {
    if (a.group_order() != b.group_order()) return 0;
    if (a.group_order() > budget) throw std::runtime_error("form isometry: beyond brute-force budget");
    if (a.orders.size() != b.orders.size()) return 0;
    for (size_t i = 0; i < a.orders.size(); ++i)
        if (a.orders[i] != b.orders[i]) return 0;

    auto btab = b.all_elements(budget);
    size_t k = a.orders.size();
    std::vector<Elem> image(k);
    long long found = 0;

    // subgroup size generated by image[0..upto)
    auto gen_size = [&](size_t upto) {
        std::vector<Elem> elems = {Elem(k, 0)};
        auto contains = [&](const Elem& e) {
            return std::find(elems.begin(), elems.end(), e) != elems.end();
        };
        for (size_t i = 0; i < upto; ++i) {
            std::vector<Elem> cur = elems;
            for (long long m = 1; m < elem_order(b, image[i]); ++m) {
                Elem shift = scale(b, image[i], m);
                for (const auto& e : cur) {
                    Elem s = add(b, e, shift);
                    if (!contains(s)) elems.push_back(s);
                }
            }
        }
        return (long long)elems.size();
    };

    std::function<bool(size_t)> go = [&](size_t idx) -> bool {
        if (idx == k) {
            if (gen_size(k) != (long long)a.group_order()) return false;
            ++found;
            if (collect) collect->push_back(image);
            return !count_all;
        }
        Elem gi(k, 0);
        gi[idx] = 1;
        for (const auto& y : btab) {
            if (elem_order(b, y) != elem_order(a, gi)) continue;
            if (b.q_of(y) != a.q[idx]) continue;
            bool ok = true;
            for (size_t j = 0; j < idx && ok; ++j)
                ok = b.b_of(image[j], y) == a.b[j][idx].mod(1);
            if (!ok) continue;
            image[idx] = y;
            if (go(idx + 1)) return true;
        }
        return false;
    };
    go(0);
    return found;
}

}  // namespace

bool forms_isometric(const FiniteQuadraticForm& a, const FiniteQuadraticForm& b, long long budget) {
    return search(a, b, budget, /*count_all=*/false) > 0;
}

long long form_isometry_count(const FiniteQuadraticForm& a, const FiniteQuadraticForm& b,
                              long long budget) {
    return search(a, b, budget, /*count_all=*/true);
}

std::vector<std::vector<FiniteQuadraticForm::Elem>> form_automorphism_images(
    const FiniteQuadraticForm& f, long long budget) {
    std::vector<std::vector<Elem>> out;
    search(f, f, budget, /*count_all=*/true, &out);
    return out;
}

}  // namespace pairlat
