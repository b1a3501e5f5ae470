#pragma once

#include <compare>
#include <stdexcept>

namespace bsnake {

// A point (i,k) of the spectral lattice, standing for the variable Y_{i,k}
// (node i of the Dynkin diagram, spectral parameter c*q^k with the fixed
// nonzero constant c absorbed into the integer level k).
struct SpectralPoint {
    int node = 0;
    int level = 0;
    friend auto operator<=>(const SpectralPoint&, const SpectralPoint&) = default;
};

// Exact point of the half-integer strip used by the path model.  The spin
// column carries offsets +-eps with 0 < eps < 1/2; eps is never given a
// numeric value, only its sign is stored.  scaled_y() gives a total order
// on y-coordinates that is exact for any eps in (0, 1/2).
struct PlanePoint {
    int x = 0;
    int y = 0;       // integer part
    int eps = 0;     // -1, 0 or +1; nonzero only on the spin column
    int scaled_y() const { return 4 * y + eps; }
    friend bool operator==(const PlanePoint&, const PlanePoint&) = default;
};

// Cartan data of type B_N (N >= 2), plus a rank-1 "sl2 mode" used by the
// restriction machinery.  r(i) is the row length: 2 for i < N, 1 for i = N.
class Algebra {
public:
    static Algebra type_b(int rank);
    static Algebra sl2();

    int rank() const { return rank_; }
    bool sl2_mode() const { return sl2_; }

    int r(int i) const;
    int cartan(int i, int j) const;

    // Membership in the spectral lattice X and its shift W = {(i,k) | (i,k-r_i) in X}.
    bool in_x(SpectralPoint p) const;
    bool in_w(SpectralPoint p) const;

    // The plane embedding of X used by the path model, and its inverse.
    // iota is defined on X only; iota_inverse throws if q is not in the image.
    PlanePoint iota(SpectralPoint p) const;
    SpectralPoint iota_inverse(PlanePoint q) const;

    int spin_column() const { return 2 * rank_ - 1; }

private:
    Algebra(int rank, bool sl2m) : rank_(rank), sl2_(sl2m) {}
    void check_node(int i) const;
    int rank_;
    bool sl2_;
};

inline int mod4(int k) { return ((k % 4) + 4) % 4; }
inline int mod2(int k) { return ((k % 2) + 2) % 2; }

} // namespace bsnake
