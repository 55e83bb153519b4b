#pragma once

#include <array>

#include "nchom/groebner.hpp"

namespace nchom {

// Dual presentation: same generator count, relation space = orthogonal
// complement of the input relation span under the word-basis pairing.
Presentation s_dual(const Presentation& p);

// Quadratic algebra on n_gens generators given by its degree-2 relation span.
struct QuadraticPresentation {
    Field field{};
    std::size_t n_gens = 0;
    Subspace relation_space;  // ambient n_gens^2, word order (x*x, x*y, y*x, y*y)
};

// Degree-0/1 slice of a graded bimodule over a quadratic algebra, with the
// generator actions as matrices. Row i of an action matrix holds the
// coordinates of (basis_i acted by that generator) in the target basis.
struct BimoduleData {
    Field field{};
    std::size_t n_algebra_gens = 0;
    std::size_t dim_m0 = 0, dim_m1 = 0, dim_m2 = 0;
    std::vector<Matrix> right_action;   // per algebra generator: M0 -> M1
    std::vector<Matrix> left_action;    // M0 -> M1
    std::vector<Matrix> right_action1;  // M1 -> M2
    std::vector<Matrix> left_action1;   // M1 -> M2

    // Conjugate the generator basis: generator'_i = sum_j inv_witness[j][i] * generator_j.
    BimoduleData change_generators(const Matrix& inv_witness) const;
};

// Graded components of the s-homogeneous dual, degree by degree. Degree d is
// presented as a quotient of V (x) (degree d-1); every basis class carries a
// representative word, so products reduce to word concatenation + projection.
class DualTower {
public:
    DualTower(const Presentation& p, int up_to);

    int up_to() const { return up_to_; }
    int s() const { return s_; }
    std::size_t n_gens() const { return m_; }
    Field field() const { return field_; }

    std::size_t dim(int d) const;
    Word basis_word(int d, std::size_t i) const;
    SparseRow word_class(const Word& w) const;
    SparseRow poly_class(const NcPoly& f) const;  // homogeneous input

private:
    Field field_{};
    std::size_t m_ = 0;
    int s_ = 0, up_to_ = 0;
    GenSetPtr gens_;
    // degree >= s: quotient data of V (x) prev
    struct Level {
        RrefBuilder image;                                    // rows in m * prev_dim coords
        std::vector<std::pair<int, std::size_t>> basis_cols;  // (letter, prev basis index)
        std::map<std::size_t, std::size_t> col_to_basis;
    };
    std::vector<Level> levels_;  // levels_[k] = degree s + k
    std::size_t dim_below_s_(int d) const;
};

// Veronese ring of the dual: generators = the two degree-s classes, relations
// = kernel of the multiplication into degree 2s.
QuadraticPresentation veronese_ring(const TruncatedGB& dual_gb, int s);
BimoduleData veronese_bimodule(const TruncatedGB& dual_gb, int s);

// Same data computed from the graded tower (no Groebner completion).
QuadraticPresentation veronese_ring(const DualTower& t);
BimoduleData veronese_bimodule(const DualTower& t);

// dim of degree-1 part of the k-th tensor power over the algebra, computed as
// a quotient of  (+)_j M0^j (x) M1 (x) M0^(k-1-j)  by the middle relations
// (m.a) (x) m' ~ m (x) (a.m') ranging over the given generator actions.
std::size_t tensor_quotient_dim1(Field field, std::size_t dim_m0, std::size_t dim_m1,
                                 const std::vector<Matrix>& right_acts,
                                 const std::vector<Matrix>& left_acts, int k);

std::size_t tensor_power_degree1(const BimoduleData& b, int k);

// l_k = dim (L^{(x)_B k})_1 for B = the s-Veronese of the algebra presented by
// gb and L its (s,1)-Veronese bimodule; returns l_0..l_kmax.
std::vector<std::size_t> veronese_tensor_dims(const TruncatedGB& gb, int kmax);

}  // namespace nchom
