#include "bsnake/lattice.hpp"

namespace bsnake {

Algebra Algebra::type_b(int rank) {
    if (rank < 2)
        throw std::domain_error("type B requires rank >= 2");
    return Algebra(rank, false);
}

Algebra Algebra::sl2() { return Algebra(1, true); }

void Algebra::check_node(int i) const {
    if (i < 1 || i > rank_)
        throw std::domain_error("node out of range");
}

int Algebra::r(int i) const {
    check_node(i);
    if (sl2_) return 1;
    return i < rank_ ? 2 : 1;
}

int Algebra::cartan(int i, int j) const {
    check_node(i);
    check_node(j);
    if (i == j) return 2;
    if (i - j == 1 || j - i == 1) {
        // short-root row: c_{N,N-1} = -2
        if (!sl2_ && i == rank_ && j == rank_ - 1) return -2;
        return -1;
    }
    return 0;
}

bool Algebra::in_x(SpectralPoint p) const {
    check_node(p.node);
    if (sl2_) return mod2(p.level) == 0; // type A_1 slice
    if (p.node == rank_) return mod2(p.level) == 1;
    return mod2(p.level) == 0;
}

bool Algebra::in_w(SpectralPoint p) const {
    return in_x({p.node, p.level - r(p.node)});
}

PlanePoint Algebra::iota(SpectralPoint p) const {
    if (sl2_)
        throw std::domain_error("plane embedding is defined for type B only");
    if (!in_x(p))
        throw std::domain_error("iota: point not in X");
    const int n = rank_;
    if (p.node == n) return {2 * n - 1, p.level, 0};
    if (mod4(2 * n + p.level - 2 * p.node) == 2) return {2 * p.node, p.level, 0};
    return {4 * n - 2 - 2 * p.node, p.level, 0};
}

SpectralPoint Algebra::iota_inverse(PlanePoint q) const {
    if (sl2_)
        throw std::domain_error("plane embedding is defined for type B only");
    const int n = rank_;
    if (q.eps == 0 && q.x == 2 * n - 1) {
        SpectralPoint p{n, q.y};
        if (in_x(p)) return p;
    }
    if (q.eps == 0 && q.x % 2 == 0) {
        int i = q.x / 2;
        if (i >= 1 && i < n && mod4(2 * n + q.y - 2 * i) == 2) {
            SpectralPoint p{i, q.y};
            if (in_x(p)) return p;
        }
        i = (4 * n - 2 - q.x) / 2;
        if (i >= 1 && i < n && mod4(2 * n + q.y - 2 * i) == 0) {
            SpectralPoint p{i, q.y};
            if (in_x(p)) return p;
        }
    }
    throw std::domain_error("not in image of iota");
}

} // namespace bsnake
