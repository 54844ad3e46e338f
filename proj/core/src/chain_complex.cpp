#include "operad/chain_complex.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "json.hpp"

namespace opd {

FiniteChainComplex::FiniteChainComplex(const Field& f,
                                       const std::map<int, std::vector<std::string>>& basis,
                                       const std::vector<Entry>& entries)
    : f_(f) {
  for (const auto& [degree, labels] : basis) {
    if (degree < 0) throw std::invalid_argument("chain complex degrees must be nonnegative");
    if (labels.empty()) continue;
    top_ = std::max(top_, degree);
    for (const std::string& label : labels) {
      if (label.empty()) throw std::invalid_argument("empty cell label");
      if (id_of_.count(label)) throw std::invalid_argument("duplicate cell label: " + label);
      int id = cell_count();
      id_of_[label] = id;
      cell_labels_.push_back(label);
      cell_degrees_.push_back(degree);
      cell_positions_.push_back(static_cast<int>(labels_[degree].size()));
      labels_[degree].push_back(label);
      cells_by_degree_[degree].push_back(id);
    }
  }

  for (int d = 0; d <= top_ + 1; ++d) d_.emplace(d, Matrix(f_, dimension(d - 1), dimension(d)));
  for (const Entry& e : entries) {
    int from = cell_id(e.from);
    int to = cell_id(e.to);
    if (from < 0 || to < 0)
      throw std::invalid_argument("differential entry names an unknown cell: " + e.from + " -> " + e.to);
    if (cell_degree(to) != cell_degree(from) - 1)
      throw std::invalid_argument("differential entry must drop the degree by one: " + e.from + " -> " + e.to);
    Matrix& m = d_.at(cell_degree(from));
    m.set(cell_position(to), cell_position(from),
          m.at(cell_position(to), cell_position(from)) + e.coef);
  }

  for (int d = 1; d <= top_; ++d) {
    if (!(d_.at(d - 1) * d_.at(d)).is_zero())
      throw std::invalid_argument("differential does not square to zero");
  }
}

int FiniteChainComplex::dimension(int degree) const {
  auto it = labels_.find(degree);
  return it == labels_.end() ? 0 : static_cast<int>(it->second.size());
}

const std::vector<std::string>& FiniteChainComplex::labels(int degree) const {
  auto it = labels_.find(degree);
  return it == labels_.end() ? no_labels_ : it->second;
}

int FiniteChainComplex::cell_id(const std::string& label) const {
  auto it = id_of_.find(label);
  return it == id_of_.end() ? -1 : it->second;
}

int FiniteChainComplex::cell_at(int degree, int position) const {
  return cells_by_degree_.at(degree)[position];
}

const Matrix& FiniteChainComplex::differential(int degree) const {
  auto it = d_.find(degree);
  if (it != d_.end()) return it->second;
  static const Matrix empty(Field::rationals(), 0, 0);
  if (dimension(degree) != 0 || dimension(degree - 1) != 0)
    throw std::logic_error("differential requested outside the stored range");
  return empty;
}

ChainVector zero_chain(const FiniteChainComplex& C, int degree) {
  return {degree, std::vector<Scalar>(C.dimension(degree), Scalar::zero(C.field()))};
}

ChainVector cell_chain(const FiniteChainComplex& C, const std::string& label) {
  int id = C.cell_id(label);
  if (id < 0) throw std::invalid_argument("unknown cell label: " + label);
  ChainVector v = zero_chain(C, C.cell_degree(id));
  v.coords[C.cell_position(id)] = Scalar::one(C.field());
  return v;
}

bool is_zero_chain(const ChainVector& v) {
  for (const Scalar& c : v.coords)
    if (!c.is_zero()) return false;
  return true;
}

ChainVector scale_chain(const ChainVector& v, const Scalar& c) {
  ChainVector out = v;
  for (Scalar& x : out.coords) x *= c;
  return out;
}

ChainVector add_chains(const ChainVector& a, const ChainVector& b) {
  if (a.degree != b.degree || a.coords.size() != b.coords.size())
    throw std::invalid_argument("chain degree mismatch");
  ChainVector out = a;
  for (size_t i = 0; i < out.coords.size(); ++i) out.coords[i] += b.coords[i];
  return out;
}

ChainVector boundary(const FiniteChainComplex& C, const ChainVector& v) {
  return {v.degree - 1, C.differential(v.degree).apply(v.coords)};
}

bool is_cycle(const FiniteChainComplex& C, const ChainVector& v) {
  return is_zero_chain(boundary(C, v));
}

std::string chain_to_string(const FiniteChainComplex& C, const ChainVector& v) {
  std::ostringstream out;
  bool first = true;
  for (size_t i = 0; i < v.coords.size(); ++i) {
    const Scalar& c = v.coords[i];
    if (c.is_zero()) continue;
    Scalar shown = c;
    if (first) {
      if (c.is_negative()) {
        out << "-";
        shown = -c;
      }
    } else {
      out << (c.is_negative() ? " - " : " + ");
      if (c.is_negative()) shown = -c;
    }
    if (!shown.is_one()) out << shown.to_string() << "*";
    out << C.labels(v.degree)[i];
    first = false;
  }
  return first ? "0" : out.str();
}

ComplexHomology::ComplexHomology(const FiniteChainComplex& C) : f_(C.field()) {
  for (int d = 0; d <= C.top_degree(); ++d) {
    Matrix cycles = kernel_basis(C.differential(d));
    const Matrix& b = C.differential(d + 1);
    Matrix reps = subspace_ops(b, cycles).quotient_representatives;
    boundaries_.emplace(d, b);
    reps_.emplace(d, std::move(reps));
  }
}

int ComplexHomology::dimension(int degree) const {
  auto it = reps_.find(degree);
  return it == reps_.end() ? 0 : it->second.cols();
}

const Matrix& ComplexHomology::representatives(const FiniteChainComplex& C, int degree) const {
  auto it = reps_.find(degree);
  if (it != reps_.end()) return it->second;
  static const Matrix empty(Field::rationals(), 0, 0);
  if (C.dimension(degree) != 0) throw std::logic_error("representatives requested outside the stored range");
  return empty;
}

std::vector<Scalar> ComplexHomology::class_coordinates(const FiniteChainComplex& C,
                                                       const ChainVector& v) const {
  if (!is_cycle(C, v)) throw std::invalid_argument("class of a non-cycle requested");
  auto it = reps_.find(v.degree);
  if (it == reps_.end()) {
    if (!is_zero_chain(v)) throw std::logic_error("cycle outside the stored range");
    return {};
  }
  const Matrix& reps = it->second;
  const Matrix& b = boundaries_.at(v.degree);
  std::optional<std::vector<Scalar>> sol = solve(reps.augment(b), v.coords);
  if (!sol) throw std::logic_error("cycle outside the span of representatives and boundaries");
  return std::vector<Scalar>(sol->begin(), sol->begin() + reps.cols());
}

namespace {

Scalar scalar_from_json(const Field& f, const nlohmann::json& j, const char* where) {
  if (j.is_number_integer()) return Scalar(f, j.get<long>());
  if (j.is_string()) return Scalar::parse(f, j.get<std::string>());
  throw std::invalid_argument(std::string("expected an integer or fraction string in ") + where);
}

}  // namespace

ComplexData load_complex(const Field& f, const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("degrees") || !j["degrees"].is_object())
    throw std::invalid_argument("complex description needs a \"degrees\" object");

  std::map<int, std::vector<std::string>> basis;
  for (const auto& [key, value] : j["degrees"].items()) {
    int degree = 0;
    try {
      size_t used = 0;
      degree = std::stoi(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw std::invalid_argument("degree keys must be integers, got \"" + key + "\"");
    }
    if (!value.is_array()) throw std::invalid_argument("\"degrees\" values must be label arrays");
    for (const auto& label : value) {
      if (!label.is_string()) throw std::invalid_argument("cell labels must be strings");
      basis[degree].push_back(label.get<std::string>());
    }
  }

  std::vector<FiniteChainComplex::Entry> entries;
  if (j.contains("d")) {
    if (!j["d"].is_array()) throw std::invalid_argument("\"d\" must be an array of rows");
    for (const auto& row : j["d"]) {
      if (!row.is_array() || row.size() != 3 || !row[0].is_string() || !row[1].is_string())
        throw std::invalid_argument("a \"d\" row is [from, to, coefficient]");
      entries.push_back({row[0].get<std::string>(), row[1].get<std::string>(),
                         scalar_from_json(f, row[2], "\"d\"")});
    }
  }

  ComplexData data{FiniteChainComplex(f, basis, entries), {}};
  if (j.contains("algebra")) {
    if (!j["algebra"].is_object()) throw std::invalid_argument("\"algebra\" must be an object");
    for (const auto& [gen, rows] : j["algebra"].items()) {
      if (!rows.is_array()) throw std::invalid_argument("structure rows must form an array");
      for (const auto& row : rows) {
        if (!row.is_array() || row.size() < 3)
          throw std::invalid_argument("a structure row is [output, inputs..., coefficient]");
        AlgebraRow r;
        if (!row[0].is_string()) throw std::invalid_argument("structure outputs must be labels");
        r.out = row[0].get<std::string>();
        for (size_t i = 1; i + 1 < row.size(); ++i) {
          if (!row[i].is_string()) throw std::invalid_argument("structure inputs must be labels");
          r.inputs.push_back(row[i].get<std::string>());
        }
        r.coef = scalar_from_json(f, row[row.size() - 1], "\"algebra\"");
        data.algebra[gen].push_back(std::move(r));
      }
    }
  }
  return data;
}

}  // namespace opd
