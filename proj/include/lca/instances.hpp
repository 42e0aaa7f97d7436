#pragma once

#include "lca/hopf.hpp"

namespace lca {

struct InvalidGroupTable : NumericError {
    using NumericError::NumericError;
};

// Cayley table of a finite group; table[i][j] = index of g_i g_j.
struct GroupTable {
    std::vector<std::string> names;
    std::vector<std::vector<int>> table;

    int order() const { return (int)names.size(); }
    void validate() const;  // throws InvalidGroupTable
    int identity() const;
    int inv(int g) const;
    int mul(int a, int b) const { return table[a][b]; }
    int elem_order(int g) const;
    int exponent() const;
    bool is_abelian() const;
};

GroupTable cyclic_group(int n);
GroupTable symmetric_group_3();

// Group algebra of Z_p with its standard ribbon quasitriangular structure
// (the lattice U(1) gauge model at deformation parameter q = exp(2*pi*i/p)).
HopfPtr make_zq(int p, Backend b = Backend::Exact);

// Drinfeld double of a finite group, irreps labelled by (conjugacy class,
// centralizer representation).  Centralizers must be abelian or the full
// group of order 6; enough for the shipped examples.
HopfPtr make_double_of_group(const GroupTable &g, Backend b = Backend::Exact,
                             const std::string &name = "");

}  // namespace lca
