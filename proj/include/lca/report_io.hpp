#pragma once

#include "lca/fusion.hpp"
#include "lca/instances.hpp"

namespace lca {

struct BadReportFile : NumericError {
    using NumericError::NumericError;
};

// line-based reports <-> JSON; the parse side exists so tools can assert
// that emitted files round-trip losslessly
std::string lines_to_json(const std::vector<CheckLine> &lines);
std::vector<CheckLine> lines_from_json(const std::string &text);
bool lines_equal(const std::vector<CheckLine> &a, const std::vector<CheckLine> &b);

std::string decomposition_to_json(const DecompositionReport &d);
DecompositionReport decomposition_from_json(const std::string &text);

// tabular output
std::string matrix_to_csv(const Op &m);
std::string mult_table_to_csv(const std::vector<std::vector<int>> &t);
std::string modular_tables_to_json(const ModularData &md);

// Cayley table from a JSON list of rows of integer indices
GroupTable group_table_from_json(const std::string &text, const std::string &name);

}  // namespace lca
