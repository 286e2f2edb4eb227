#include "dataset.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "error.hpp"

namespace marsbn {
namespace {

constexpr int kMaxInferredLabels = 20;

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = line.find(sep, start);
    if (pos == std::string::npos) {
      out.push_back(trim(line.substr(start)));
      break;
    }
    out.push_back(trim(line.substr(start, pos - start)));
    start = pos + 1;
  }
  return out;
}

bool parse_double(const std::string& tok, double* out) {
  if (tok.empty()) return false;
  char* end = nullptr;
  double v = std::strtod(tok.c_str(), &end);
  if (end != tok.c_str() + tok.size()) return false;
  *out = v;
  return true;
}

// Optional sign followed by digits only. Tokens like "2.0" or "1e3" count as
// fractional even when their value is integral.
bool is_integer_token(const std::string& tok) {
  std::size_t i = 0;
  if (i < tok.size() && (tok[i] == '+' || tok[i] == '-')) ++i;
  if (i >= tok.size()) return false;
  for (; i < tok.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(tok[i]))) return false;
  return true;
}

bool is_fractional_numeric(const std::string& tok) {
  double v;
  return parse_double(tok, &v) && !is_integer_token(tok);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error::io("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t pos = text.find('\n', start);
    if (pos == std::string::npos) {
      if (start < text.size()) lines.push_back(text.substr(start));
      break;
    }
    std::string line = text.substr(start, pos - start);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
    start = pos + 1;
  }
  return lines;
}

void check_name(const std::string& name, const std::string& origin) {
  if (name.empty()) throw Error::parse(origin + ": empty column name in header");
  for (char c : name)
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',' || c == '#')
      throw Error::parse(origin + ": column name '" + name + "' contains a reserved character");
}

}  // namespace

int Dataset::var_index(const std::string& name) const {
  for (const auto& m : metas)
    if (m.name == name) return m.index;
  return -1;
}

const Schema::Entry* Schema::find(const std::string& name) const {
  for (const auto& e : entries)
    if (e.name == name) return &e;
  return nullptr;
}

Dataset parse_csv(const std::string& text, const std::optional<Schema>& schema, const std::string& origin) {
  auto lines = split_lines(text);
  while (!lines.empty() && trim(lines.back()).empty()) lines.pop_back();
  if (lines.empty()) throw Error::parse(origin + ": empty file");

  auto header = split(lines[0], ',');
  const int n = static_cast<int>(header.size());
  std::unordered_set<std::string> seen;
  for (const auto& name : header) {
    check_name(name, origin);
    if (!seen.insert(name).second) throw Error::parse(origin + ": duplicate column name '" + name + "'");
  }
  if (lines.size() < 2) throw Error::parse(origin + ": no data rows");

  const int n_rows = static_cast<int>(lines.size()) - 1;
  std::vector<std::vector<std::string>> cells(static_cast<std::size_t>(n));
  for (auto& c : cells) c.resize(static_cast<std::size_t>(n_rows));

  for (int r = 0; r < n_rows; ++r) {
    const int file_row = r + 2;
    auto fields = split(lines[static_cast<std::size_t>(r) + 1], ',');
    if (static_cast<int>(fields.size()) != n)
      throw Error::parse(origin + ": row " + std::to_string(file_row) + ": expected " + std::to_string(n) +
                         " fields, got " + std::to_string(fields.size()));
    for (int c = 0; c < n; ++c) {
      if (fields[static_cast<std::size_t>(c)].empty())
        throw Error::parse(origin + ": row " + std::to_string(file_row) + " column '" + header[static_cast<std::size_t>(c)] +
                           "': missing value");
      cells[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)] = fields[static_cast<std::size_t>(c)];
    }
  }

  if (schema) {
    for (const auto& e : schema->entries) {
      bool known = false;
      for (const auto& name : header) known = known || name == e.name;
      if (!known) throw Error::parse(origin + ": schema names unknown column '" + e.name + "'");
    }
  }

  Dataset d;
  d.metas.resize(static_cast<std::size_t>(n));
  d.columns.resize(static_cast<std::size_t>(n));

  for (int c = 0; c < n; ++c) {
    VariableMeta meta;
    meta.name = header[static_cast<std::size_t>(c)];
    meta.index = c;
    const auto& col = cells[static_cast<std::size_t>(c)];
    const Schema::Entry* entry = schema ? schema->find(meta.name) : nullptr;

    bool categorical;
    std::vector<std::string> domain;
    if (entry) {
      categorical = entry->kind == VarKind::Categorical;
      domain = entry->domain;
    } else {
      std::vector<std::string> distinct;
      bool all_non_fractional = true;
      for (const auto& tok : col) {
        if (is_fractional_numeric(tok)) {
          all_non_fractional = false;
          break;
        }
        if (std::find(distinct.begin(), distinct.end(), tok) == distinct.end()) {
          distinct.push_back(tok);
          if (static_cast<int>(distinct.size()) > kMaxInferredLabels) break;
        }
      }
      categorical = all_non_fractional && static_cast<int>(distinct.size()) <= kMaxInferredLabels &&
                    static_cast<int>(distinct.size()) >= 2;
      domain = std::move(distinct);
    }

    std::vector<double>& values = d.columns[static_cast<std::size_t>(c)];
    values.resize(static_cast<std::size_t>(n_rows));
    if (categorical) {
      std::unordered_map<std::string, int> label_id;
      for (std::size_t i = 0; i < domain.size(); ++i) label_id[domain[i]] = static_cast<int>(i);
      for (int r = 0; r < n_rows; ++r) {
        auto it = label_id.find(col[static_cast<std::size_t>(r)]);
        if (it == label_id.end())
          throw Error::parse(origin + ": row " + std::to_string(r + 2) + " column '" + meta.name + "': label '" +
                             col[static_cast<std::size_t>(r)] + "' not in declared domain");
        values[static_cast<std::size_t>(r)] = it->second;
      }
      meta.kind = VarKind::Categorical;
      meta.domain = std::move(domain);
      if (meta.cardinality() < 2)
        throw Error::parse(origin + ": column '" + meta.name + "': categorical domain needs at least 2 labels");
    } else {
      for (int r = 0; r < n_rows; ++r) {
        double v;
        if (!parse_double(col[static_cast<std::size_t>(r)], &v))
          throw Error::parse(origin + ": row " + std::to_string(r + 2) + " column '" + meta.name +
                             "': non-numeric value '" + col[static_cast<std::size_t>(r)] + "' in continuous column");
        values[static_cast<std::size_t>(r)] = v;
      }
      meta.kind = VarKind::Continuous;
    }
    d.metas[static_cast<std::size_t>(c)] = std::move(meta);
  }
  return d;
}

Dataset load_csv(const std::string& path, const std::optional<Schema>& schema) {
  return parse_csv(read_file(path), schema, path);
}

void save_csv(const Dataset& d, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error::io("cannot write file: " + path);
  for (int c = 0; c < d.n_vars(); ++c) out << (c ? "," : "") << d.metas[static_cast<std::size_t>(c)].name;
  out << '\n';
  char buf[64];
  for (int r = 0; r < d.n_rows(); ++r) {
    for (int c = 0; c < d.n_vars(); ++c) {
      if (c) out << ',';
      const auto& meta = d.metas[static_cast<std::size_t>(c)];
      double v = d.columns[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)];
      if (meta.kind == VarKind::Categorical) {
        out << meta.domain[static_cast<std::size_t>(static_cast<int>(v))];
      } else {
        std::snprintf(buf, sizeof(buf), "%.17g", v);
        out << buf;
      }
    }
    out << '\n';
  }
  if (!out) throw Error::io("write failed: " + path);
}

void save_schema(const Dataset& d, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error::io("cannot write file: " + path);
  for (const auto& m : d.metas) {
    if (m.kind == VarKind::Continuous) {
      out << m.name << " = continuous\n";
    } else {
      out << m.name << " = categorical:";
      for (std::size_t i = 0; i < m.domain.size(); ++i) out << (i ? "," : "") << m.domain[i];
      out << '\n';
    }
  }
  if (!out) throw Error::io("write failed: " + path);
}

Schema load_schema(const std::string& path) {
  auto lines = split_lines(read_file(path));
  Schema schema;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::string line = trim(lines[i]);
    if (line.empty() || line[0] == '#') continue;
    std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw Error::parse(path + ": line " + std::to_string(i + 1) + ": expected 'name = kind'");
    Schema::Entry e;
    e.name = trim(line.substr(0, eq));
    std::string kind = trim(line.substr(eq + 1));
    if (kind == "continuous") {
      e.kind = VarKind::Continuous;
    } else if (kind.rfind("categorical:", 0) == 0) {
      e.kind = VarKind::Categorical;
      e.domain = split(kind.substr(std::string("categorical:").size()), ',');
      std::unordered_set<std::string> uniq;
      for (const auto& label : e.domain) {
        if (label.empty())
          throw Error::parse(path + ": line " + std::to_string(i + 1) + ": empty label in domain");
        if (!uniq.insert(label).second)
          throw Error::parse(path + ": line " + std::to_string(i + 1) + ": duplicate label '" + label + "'");
      }
      if (e.domain.size() < 2)
        throw Error::parse(path + ": line " + std::to_string(i + 1) + ": categorical domain needs at least 2 labels");
    } else {
      throw Error::parse(path + ": line " + std::to_string(i + 1) + ": unknown kind '" + kind + "'");
    }
    for (const auto& prev : schema.entries)
      if (prev.name == e.name)
        throw Error::parse(path + ": line " + std::to_string(i + 1) + ": duplicate entry for '" + e.name + "'");
    schema.entries.push_back(std::move(e));
  }
  return schema;
}

EncodedMatrix encode_dataset(const Dataset& d, const std::vector<int>& vars) {
  if (vars.empty()) throw Error::invalid("encode_dataset: empty variable list");
  std::vector<int> sorted = vars;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw Error::invalid("encode_dataset: duplicate variable index");
  for (int v : sorted)
    if (v < 0 || v >= d.n_vars()) throw Error::invalid("encode_dataset: variable index out of range");

  EncodedMatrix m;
  const int n_rows = d.n_rows();
  for (int v : sorted) {
    const auto& meta = d.metas[static_cast<std::size_t>(v)];
    const auto& col = d.columns[static_cast<std::size_t>(v)];
    if (meta.kind == VarKind::Continuous) {
      m.columns.push_back(col);
      m.col_map.push_back({v, -1});
    } else {
      for (int label = 0; label < meta.cardinality(); ++label) {
        std::vector<double> ind(static_cast<std::size_t>(n_rows), 0.0);
        for (int r = 0; r < n_rows; ++r)
          if (static_cast<int>(col[static_cast<std::size_t>(r)]) == label) ind[static_cast<std::size_t>(r)] = 1.0;
        m.columns.push_back(std::move(ind));
        m.col_map.push_back({v, label});
      }
    }
  }
  return m;
}

std::uint64_t dataset_hash(const Dataset& d) {
  std::uint64_t h = 1469598103934665603ULL;  // FNV-1a
  auto feed = [&h](const void* data, std::size_t len) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < len; ++i) {
      h ^= p[i];
      h *= 1099511628211ULL;
    }
  };
  auto feed_str = [&](const std::string& s) { feed(s.data(), s.size()); feed("\x1f", 1); };

  std::uint64_t dims[2] = {static_cast<std::uint64_t>(d.n_vars()), static_cast<std::uint64_t>(d.n_rows())};
  feed(dims, sizeof(dims));
  for (const auto& m : d.metas) {
    feed_str(m.name);
    unsigned char k = m.kind == VarKind::Categorical ? 1 : 0;
    feed(&k, 1);
    for (const auto& label : m.domain) feed_str(label);
  }
  for (const auto& col : d.columns) feed(col.data(), col.size() * sizeof(double));
  return h;
}

}  // namespace marsbn
