#include "dtslice/nn/paramset.hpp"

#include "dtslice/errors.hpp"

namespace dtslice::nn {

Matrix &ParamSet::add(const std::string &name, Eigen::Index rows, Eigen::Index cols) {
    auto [it, inserted] = tensors_.emplace(name, Matrix::Zero(rows, cols));
    if (!inserted)
        throw ShapeError("ParamSet::add: tensor '" + name + "' already exists");
    return it->second;
}

Matrix &ParamSet::add(const std::string &name, Matrix value) {
    auto [it, inserted] = tensors_.emplace(name, std::move(value));
    if (!inserted)
        throw ShapeError("ParamSet::add: tensor '" + name + "' already exists");
    return it->second;
}

Matrix &ParamSet::at(const std::string &name) {
    auto it = tensors_.find(name);
    if (it == tensors_.end())
        throw ShapeError("ParamSet::at: no tensor named '" + name + "'");
    return it->second;
}

const Matrix &ParamSet::at(const std::string &name) const {
    auto it = tensors_.find(name);
    if (it == tensors_.end())
        throw ShapeError("ParamSet::at: no tensor named '" + name + "'");
    return it->second;
}

Eigen::Index ParamSet::size() const {
    Eigen::Index total = 0;
    for (const auto &[name, t] : tensors_)
        total += t.size();
    return total;
}

bool ParamSet::same_shape(const ParamSet &other) const {
    if (tensors_.size() != other.tensors_.size())
        return false;
    auto a = tensors_.begin();
    auto b = other.tensors_.begin();
    for (; a != tensors_.end(); ++a, ++b) {
        if (a->first != b->first || a->second.rows() != b->second.rows() || a->second.cols() != b->second.cols())
            return false;
    }
    return true;
}

ParamSet ParamSet::zeros_like() const {
    ParamSet out;
    for (const auto &[name, t] : tensors_)
        out.add(name, t.rows(), t.cols());
    return out;
}

void ParamSet::set_zero() {
    for (auto &[name, t] : tensors_)
        t.setZero();
}

Vector flatten(const ParamSet &params) {
    Vector flat(params.size());
    Eigen::Index offset = 0;
    for (const auto &[name, t] : params.tensors()) {
        flat.segment(offset, t.size()) = Eigen::Map<const Vector>(t.data(), t.size());
        offset += t.size();
    }
    return flat;
}

ParamSet unflatten(const Vector &flat, const ParamSet &shape_template) {
    if (flat.size() != shape_template.size())
        throw ShapeError("unflatten: flat length " + std::to_string(flat.size()) + " != template size " +
                         std::to_string(shape_template.size()));
    ParamSet out = shape_template.zeros_like();
    out.step_count = shape_template.step_count;
    Eigen::Index offset = 0;
    for (auto &[name, t] : out.tensors()) {
        Eigen::Map<Vector>(t.data(), t.size()) = flat.segment(offset, t.size());
        offset += t.size();
    }
    return out;
}

} // namespace dtslice::nn
