#include "dea/panel.hpp"

#include <cmath>
#include <unordered_set>

#include "dea/errors.hpp"

namespace dea {

Panel::Panel(std::vector<std::string> names, Matrix inputs, Matrix outputs,
             std::vector<std::string> input_labels,
             std::vector<std::string> output_labels)
    : names_(std::move(names)),
      inputs_(std::move(inputs)),
      outputs_(std::move(outputs)),
      input_labels_(std::move(input_labels)),
      output_labels_(std::move(output_labels)) {
  const std::size_t n = names_.size();
  if (n == 0) throw InputError("panel needs at least one DMU");
  if (inputs_.rows() == 0) throw InputError("panel needs at least one input");
  if (outputs_.rows() == 0) throw InputError("panel needs at least one output");
  if (inputs_.cols() != n || outputs_.cols() != n) {
    throw InputError("input/output matrices must have one column per DMU");
  }
  if (input_labels_.size() != inputs_.rows()) {
    throw InputError("input label count does not match input rows");
  }
  if (output_labels_.size() != outputs_.rows()) {
    throw InputError("output label count does not match output rows");
  }
  std::unordered_set<std::string> seen;
  for (const auto& name : names_) {
    if (name.empty()) throw InputError("DMU names must be nonempty");
    if (!seen.insert(name).second) {
      throw InputError("duplicate DMU name '" + name + "'");
    }
  }
  for (std::size_t i = 0; i < inputs_.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!std::isfinite(inputs_.at(i, j))) {
        throw InputError("non-finite input cell for DMU '" + names_[j] + "'");
      }
    }
  }
  for (std::size_t r = 0; r < outputs_.rows(); ++r) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!std::isfinite(outputs_.at(r, j))) {
        throw InputError("non-finite output cell for DMU '" + names_[j] + "'");
      }
    }
  }
}

Activity Panel::activity(std::size_t j) const {
  if (j >= num_dmus()) throw InputError("DMU index out of range");
  Activity a;
  a.inputs.resize(num_inputs());
  a.outputs.resize(num_outputs());
  for (std::size_t i = 0; i < num_inputs(); ++i) a.inputs[i] = inputs_.at(i, j);
  for (std::size_t r = 0; r < num_outputs(); ++r) a.outputs[r] = outputs_.at(r, j);
  return a;
}

Panel Panel::with_dmu(const std::string& name, const Activity& activity) const {
  if (activity.inputs.size() != num_inputs() ||
      activity.outputs.size() != num_outputs()) {
    throw InputError("activity dimensions do not match the panel");
  }
  const std::size_t n = num_dmus();
  Matrix in(num_inputs(), n + 1);
  Matrix out(num_outputs(), n + 1);
  for (std::size_t i = 0; i < num_inputs(); ++i) {
    for (std::size_t j = 0; j < n; ++j) in.at(i, j) = inputs_.at(i, j);
    in.at(i, n) = activity.inputs[i];
  }
  for (std::size_t r = 0; r < num_outputs(); ++r) {
    for (std::size_t j = 0; j < n; ++j) out.at(r, j) = outputs_.at(r, j);
    out.at(r, n) = activity.outputs[r];
  }
  std::vector<std::string> names = names_;
  names.push_back(name);
  return Panel(std::move(names), std::move(in), std::move(out), input_labels_,
               output_labels_);
}

void Panel::check_semipositive() const {
  for (std::size_t j = 0; j < num_dmus(); ++j) {
    bool input_pos = false, output_pos = false;
    for (std::size_t i = 0; i < num_inputs(); ++i) {
      const double v = inputs_.at(i, j);
      if (v < 0) {
        throw InputError("DMU '" + names_[j] + "' has negative input '" +
                         input_labels_[i] + "'");
      }
      if (v > 0) input_pos = true;
    }
    for (std::size_t r = 0; r < num_outputs(); ++r) {
      const double v = outputs_.at(r, j);
      if (v < 0) {
        throw InputError("DMU '" + names_[j] + "' has negative output '" +
                         output_labels_[r] + "'");
      }
      if (v > 0) output_pos = true;
    }
    if (!input_pos) {
      throw InputError("DMU '" + names_[j] + "' has all-zero inputs");
    }
    if (!output_pos) {
      throw InputError("DMU '" + names_[j] + "' has all-zero outputs");
    }
  }
}

}  // namespace dea
