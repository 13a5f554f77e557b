// Decision-making-unit panel: named activities over shared input/output axes.

#ifndef DEA_PANEL_HPP
#define DEA_PANEL_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace dea {

// Dense row-major matrix. DEA instances are small, so no sparsity machinery.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

// One DMU's input and output vectors.
struct Activity {
  std::vector<double> inputs;
  std::vector<double> outputs;
};

// n named DMUs, an m x n input matrix and an s x n output matrix (one column
// per DMU). Construction enforces the structural invariants: consistent
// dimensions, n,m,s >= 1, unique nonempty names, finite cells. Sign
// conditions (semipositive columns, no negative cells) are deliberately not
// enforced here so that validation can report them; the DEA operations
// reject offending panels via check_semipositive().
class Panel {
 public:
  Panel(std::vector<std::string> names, Matrix inputs, Matrix outputs,
        std::vector<std::string> input_labels,
        std::vector<std::string> output_labels);

  std::size_t num_dmus() const { return names_.size(); }
  std::size_t num_inputs() const { return inputs_.rows(); }
  std::size_t num_outputs() const { return outputs_.rows(); }

  const std::string& name(std::size_t j) const { return names_[j]; }
  double input(std::size_t i, std::size_t j) const { return inputs_.at(i, j); }
  double output(std::size_t r, std::size_t j) const { return outputs_.at(r, j); }

  const std::vector<std::string>& names() const { return names_; }
  const std::vector<std::string>& input_labels() const { return input_labels_; }
  const std::vector<std::string>& output_labels() const { return output_labels_; }
  const Matrix& inputs() const { return inputs_; }
  const Matrix& outputs() const { return outputs_; }

  Activity activity(std::size_t j) const;

  // Returns a new panel with one extra DMU column appended.
  Panel with_dmu(const std::string& name, const Activity& activity) const;

  // Throws InputError naming the first DMU whose inputs or outputs are not
  // semipositive (all entries >= 0, at least one > 0).
  void check_semipositive() const;

  bool operator==(const Panel&) const = default;

 private:
  std::vector<std::string> names_;
  Matrix inputs_;
  Matrix outputs_;
  std::vector<std::string> input_labels_;
  std::vector<std::string> output_labels_;
};

}  // namespace dea

#endif  // DEA_PANEL_HPP
