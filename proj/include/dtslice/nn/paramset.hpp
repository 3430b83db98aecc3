#pragma once

#include <Eigen/Core>
#include <map>
#include <string>
#include <vector>

namespace dtslice::nn {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// Named collection of parameter tensors. Iteration (and therefore the
// flattened layout) follows lexicographic tensor-name order, so two ParamSets
// with the same shapes always flatten compatibly.
class ParamSet {
public:
    ParamSet() = default;

    Matrix &add(const std::string &name, Eigen::Index rows, Eigen::Index cols);
    Matrix &add(const std::string &name, Matrix value);
    Matrix &at(const std::string &name);
    const Matrix &at(const std::string &name) const;
    bool has(const std::string &name) const { return tensors_.count(name) > 0; }

    const std::map<std::string, Matrix> &tensors() const { return tensors_; }
    std::map<std::string, Matrix> &tensors() { return tensors_; }

    // Total number of scalar parameters.
    Eigen::Index size() const;

    // Same tensor names and shapes.
    bool same_shape(const ParamSet &other) const;

    // All tensors zeroed, shapes preserved.
    ParamSet zeros_like() const;

    void set_zero();

    // Optimizer-state coupling: number of gradient steps applied to this set.
    long step_count = 0;

private:
    std::map<std::string, Matrix> tensors_;
};

// Concatenates all tensors (column-major within each tensor, name order across
// tensors) into one vector.
Vector flatten(const ParamSet &params);

// Rebuilds a ParamSet with the template's names/shapes from a flat vector.
// Throws ShapeError if the length does not match.
ParamSet unflatten(const Vector &flat, const ParamSet &shape_template);

} // namespace dtslice::nn
