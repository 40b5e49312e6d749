#pragma once

#include <random>

#include "qorb/qscalar.hpp"

namespace qorb {

// Random scalars drawn from the building blocks that occur in practice:
// s-powers, q-integers, radicals of q-integer ratios and roots of unity.
class ScalarSampler {
public:
    explicit ScalarSampler(unsigned seed, int zeta_order = 3) : rng_(seed), order_(zeta_order) {}

    QScalar atom() {
        std::uniform_int_distribution<int> kind(0, 5);
        std::uniform_int_distribution<int> small(-3, 3);
        std::uniform_int_distribution<int> pos(1, 4);
        switch (kind(rng_)) {
            case 0: return QScalar::s_pow(small(rng_), mpq_class(small(rng_) == 0 ? 1 : small(rng_), pos(rng_)));
            case 1: return q_int(pos(rng_)) * QScalar::s_pow(small(rng_));
            case 2: return (QScalar::s_pow(2 * small(rng_)) / q_int(pos(rng_) + 1)).sqrt();
            case 3: return (q_int(pos(rng_)) / q_int(pos(rng_))).sqrt();
            case 4: return QScalar::zeta(small(rng_), order_);
            default: return QScalar(mpq_class(small(rng_), pos(rng_)));
        }
    }

    QScalar sample() {
        std::uniform_int_distribution<int> terms(1, 3);
        QScalar x;
        int n = terms(rng_);
        for (int i = 0; i < n; ++i) x += atom() * atom();
        return x;
    }

    QScalar nonzero() {
        for (;;) {
            QScalar x = sample();
            if (!x.is_zero()) return x;
        }
    }

private:
    std::mt19937 rng_;
    int order_;
};

}  // namespace qorb
