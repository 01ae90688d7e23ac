#pragma once

#include <map>
#include <string>
#include <vector>

#include "vinberg/linalg.hpp"
#include "vinberg/scalars.hpp"

namespace vinberg {

// A simple root system with roots stored as integer coordinate vectors in the
// simple-root basis. Positive roots come first, sorted by (height, lex);
// root npos+i is the negative of root i.
struct RootSystem {
    char type = 0;
    long rank = 0;
    std::vector<std::vector<long>> cartan;  // cartan[i][j] = <alpha_j, alpha_i^vee>
    std::vector<long> dsym;                 // (alpha_i, alpha_i)/2
    std::vector<std::vector<long>> roots;
    std::vector<long> heights;
    long npos = 0;
    std::map<std::vector<long>, long> index_of;

    long nroots() const { return (long)roots.size(); }
    long root_index(const std::vector<long>& c) const {
        auto it = index_of.find(c);
        return it == index_of.end() ? -1 : it->second;
    }
    long neg_index(long i) const { return i < npos ? i + npos : i - npos; }

    // <beta, alpha_i^vee>
    long pairing_coroot_simple(const std::vector<long>& beta, long i) const;
    // symmetrized bilinear form (a, b)
    long bilinear(const std::vector<long>& a, const std::vector<long>& b) const;
    // <beta, gamma^vee> = 2 (beta, gamma) / (gamma, gamma)
    long pairing_coroot(const std::vector<long>& beta, const std::vector<long>& gamma) const;
    std::vector<long> reflect(const std::vector<long>& beta, const std::vector<long>& gamma) const;

    long max_height() const;
    long coxeter_number() const { return max_height() + 1; }
    std::vector<long> highest_root() const;
    long lowest_root_index() const;
    std::vector<long> invariant_degrees() const;  // sorted ascending

    std::string name() const { return std::string(1, type) + std::to_string(rank); }
};

RootSystem build_root_system(char type, long rank);

// Coweight given by its pairings with the simple roots.
struct CoweightVector {
    std::vector<Rat> pairings;
    Rat pair_root(const std::vector<long>& root) const {
        Rat s(0);
        for (size_t i = 0; i < pairings.size(); ++i) s += pairings[i] * Rat(root[i]);
        return s;
    }
};

CoweightVector rho_check(const RootSystem& rs);

struct DiagramAutomorphism {
    std::vector<long> perm;  // image of simple-root indices
    long order = 1;
    bool is_identity() const {
        for (size_t i = 0; i < perm.size(); ++i)
            if (perm[i] != (long)i) return false;
        return true;
    }
};

std::vector<DiagramAutomorphism> diagram_automorphisms(const RootSystem& rs);

// Integer endomorphism of the root lattice; column j = image of alpha_j.
struct LatticeEndo {
    std::vector<std::vector<long>> mat;
    std::vector<long> apply(const std::vector<long>& v) const;
};

LatticeEndo lattice_identity(long rank);
// Product of the reflections in the chosen roots, applied left to right.
// Throws std::domain_error if the chosen roots are linearly dependent.
LatticeEndo subsystem_coxeter(const RootSystem& rs, const std::vector<long>& root_indices);
long endo_order(const LatticeEndo& w, long bound = 10000);
Int endo_det_one_minus(const LatticeEndo& w);

// Invariant factors of the cokernel of (1 - w); entries > 1 followed by one
// zero per free rank. Empty means trivial quotient.
std::vector<Int> coinvariant_lattice(const RootSystem& rs, const LatticeEndo& w);

// Simple-root index sets of two orthogonal A4 subsystems inside E8
// (the second one uses the lowest root); used to build an elliptic
// order-5 Weyl element.
std::pair<std::vector<long>, std::vector<long>> a4_a4_in_e8(const RootSystem& rs);

}  // namespace vinberg
