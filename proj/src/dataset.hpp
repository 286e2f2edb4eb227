#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace marsbn {

enum class VarKind { Continuous, Categorical };

struct VariableMeta {
  std::string name;
  int index = 0;
  VarKind kind = VarKind::Continuous;
  std::vector<std::string> domain;  // categorical only; position = label id

  int cardinality() const { return static_cast<int>(domain.size()); }
  bool operator==(const VariableMeta&) const = default;
};

// Complete data: no missing cells. Columns are stored column-major;
// categorical cells hold the label id as a double.
struct Dataset {
  std::vector<VariableMeta> metas;
  std::vector<std::vector<double>> columns;

  int n_vars() const { return static_cast<int>(metas.size()); }
  int n_rows() const { return columns.empty() ? 0 : static_cast<int>(columns[0].size()); }
  int var_index(const std::string& name) const;  // -1 if absent
};

struct DesignColumn {
  int source_var = 0;
  int label = -1;  // >= 0 marks an indicator column for that label id
};

struct EncodedMatrix {
  std::vector<std::vector<double>> columns;
  std::vector<DesignColumn> col_map;

  int n_cols() const { return static_cast<int>(columns.size()); }
  int n_rows() const { return columns.empty() ? 0 : static_cast<int>(columns[0].size()); }
};

// Per-variable type overrides loaded from a schema sidecar.
struct Schema {
  struct Entry {
    std::string name;
    VarKind kind = VarKind::Continuous;
    std::vector<std::string> domain;  // categorical only
  };
  std::vector<Entry> entries;

  const Entry* find(const std::string& name) const;
};

// Columns are typed per the schema entry when one exists; otherwise a column
// is Categorical when all its values form a set of at most 20 distinct
// non-fractional tokens (domain ordered by first appearance), else Continuous.
// Row numbers in error messages are 1-based file lines (header is line 1).
Dataset load_csv(const std::string& path, const std::optional<Schema>& schema = std::nullopt);
Dataset parse_csv(const std::string& text, const std::optional<Schema>& schema, const std::string& origin);

void save_csv(const Dataset& d, const std::string& path);
void save_schema(const Dataset& d, const std::string& path);
Schema load_schema(const std::string& path);

// Design columns in ascending variable-index order; a categorical variable
// with l labels expands to l {0,1} indicator columns that sum to 1 per row.
EncodedMatrix encode_dataset(const Dataset& d, const std::vector<int>& vars);

// Content hash (names, kinds, domains, cell values); used to detect
// score-file/dataset mismatches.
std::uint64_t dataset_hash(const Dataset& d);

}  // namespace marsbn
