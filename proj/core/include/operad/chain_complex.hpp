#pragma once

#include <map>
#include <string>
#include <vector>

#include "operad/matrix.hpp"
#include "operad/scalar.hpp"

namespace opd {

// A finitely supported, nonnegatively graded chain complex with a named cell
// basis and exact differential matrices d : C_d -> C_{d-1}, validated to
// square to zero at construction.
class FiniteChainComplex {
public:
  struct Entry {
    std::string from;
    std::string to;
    Scalar coef;
  };

  // Throws std::invalid_argument on: a negative degree, a duplicate or empty
  // label, an entry naming an unknown label, an entry that does not drop the
  // degree by exactly one, or a differential that fails d(d(x)) = 0.
  FiniteChainComplex(const Field& f, const std::map<int, std::vector<std::string>>& basis,
                     const std::vector<Entry>& entries);

  const Field& field() const { return f_; }
  int top_degree() const { return top_; }  // -1 for the zero complex

  int dimension(int degree) const;
  const std::vector<std::string>& labels(int degree) const;

  // Flat cell ids in degree-major declaration order; stable keys for the
  // multilinear-map layer.
  int cell_count() const { return static_cast<int>(cell_labels_.size()); }
  int cell_id(const std::string& label) const;  // -1 when absent
  const std::string& cell_label(int id) const { return cell_labels_[id]; }
  int cell_degree(int id) const { return cell_degrees_[id]; }
  int cell_position(int id) const { return cell_positions_[id]; }
  int cell_at(int degree, int position) const;

  // Matrix of d : C_degree -> C_{degree-1}; zero-shaped outside the support.
  const Matrix& differential(int degree) const;

private:
  Field f_;
  int top_ = -1;
  std::map<int, std::vector<std::string>> labels_;
  std::vector<std::string> cell_labels_;
  std::vector<int> cell_degrees_;
  std::vector<int> cell_positions_;
  std::map<int, std::vector<int>> cells_by_degree_;
  std::map<std::string, int> id_of_;
  std::map<int, Matrix> d_;
  std::vector<std::string> no_labels_;
};

// A homogeneous element of the complex: dense coordinates on labels(degree).
struct ChainVector {
  int degree = 0;
  std::vector<Scalar> coords;
};

ChainVector zero_chain(const FiniteChainComplex& C, int degree);
// The basis vector of one named cell.
ChainVector cell_chain(const FiniteChainComplex& C, const std::string& label);
bool is_zero_chain(const ChainVector& v);
ChainVector scale_chain(const ChainVector& v, const Scalar& c);
// Both sides must share a degree.
ChainVector add_chains(const ChainVector& a, const ChainVector& b);
ChainVector boundary(const FiniteChainComplex& C, const ChainVector& v);
bool is_cycle(const FiniteChainComplex& C, const ChainVector& v);
std::string chain_to_string(const FiniteChainComplex& C, const ChainVector& v);

// Homology of the complex: representative cycles and class coordinates per
// degree, fixed once at construction.
class ComplexHomology {
public:
  explicit ComplexHomology(const FiniteChainComplex& C);

  int dimension(int degree) const;
  // Columns are the representative cycles, in basis(degree) coordinates.
  const Matrix& representatives(const FiniteChainComplex& C, int degree) const;
  // Coordinates of a cycle's class on the representative columns; throws
  // std::invalid_argument when v is not a cycle.
  std::vector<Scalar> class_coordinates(const FiniteChainComplex& C, const ChainVector& v) const;

private:
  Field f_;
  std::map<int, Matrix> reps_;
  std::map<int, Matrix> boundaries_;
};

// One structure-map row from a data file: the value of a generator on one
// basis tuple.
struct AlgebraRow {
  std::string out;
  std::vector<std::string> inputs;
  Scalar coef;
};

struct ComplexData {
  FiniteChainComplex complex;
  std::map<std::string, std::vector<AlgebraRow>> algebra;  // generator name -> rows
};

// Parse the JSON description
//   { "degrees": {"1": ["S1"], ...},
//     "d": [["D3", "dD3", 1], ...],
//     "algebra": {"mu": [["dD3", "S1", "S1", 1], ...] } }
// where a "d" row is [from, to, coefficient] and an "algebra" row is
// [output, input_1, ..., input_n, coefficient].  Coefficients are integers
// or "n/d" strings; "d" and "algebra" may be absent.  Throws
// std::invalid_argument on malformed input.
ComplexData load_complex(const Field& f, const std::string& json_text);

}  // namespace opd
