#pragma once

#include <string>
#include <vector>

#include "magni/filtered_complex.hpp"

namespace magni {

struct Bar {
    int degree = 0;
    Rat birth;
    ExtRat death; // infinite for essential classes

    bool alive_at(const Rat& eps) const { return birth <= eps && ExtRat(eps) < death; }
    bool operator==(const Bar& o) const {
        return degree == o.degree && birth == o.birth && death == o.death;
    }
};

struct Barcode {
    std::vector<Bar> bars; // sorted by (degree, birth, death)
    int characteristic = 2;
    int complete_below_degree = 0; // bars in degrees < this are exact; higher may be truncated

    int alive_count(int degree, const Rat& eps) const {
        int n = 0;
        for (const auto& b : bars)
            if (b.degree == degree && b.alive_at(eps)) ++n;
        return n;
    }
    std::string to_tsv() const;
};

// Standard column reduction of the boundary matrix over F_p in filtration
// order. Bars of zero length are not stored. Throws ValidationError
// (NonPrimeCharacteristic, UnsortedComplex).
Barcode reduce_persistence(const FilteredComplex& complex, int p);

// Betti numbers over F_p of the sublevel complex at eps, for degrees
// 0..k_max; degree k_max requires cells of dimension k_max+1 to be present in
// the complex for its value to be meaningful.
std::vector<int> sublevel_betti(const FilteredComplex& complex, const Rat& eps, int p, int k_max);

bool is_prime(long long n);

} // namespace magni
