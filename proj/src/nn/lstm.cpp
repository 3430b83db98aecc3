#include "dtslice/nn/lstm.hpp"

#include "dtslice/errors.hpp"

#include <cmath>

namespace dtslice::nn {

namespace {

Matrix sigmoid(const Matrix &x) { return (1.0 / (1.0 + (-x.array()).exp())).matrix(); }

} // namespace

ParamSet lstm_init(const LstmSpec &spec, Rng &rng) {
    if (spec.input < 1 || spec.hidden < 1 || spec.output < 1)
        throw ShapeError("lstm_init: all widths must be >= 1");
    const int h = spec.hidden;
    ParamSet params;
    auto fill = [&rng](Matrix &m, int fan_in) {
        const double bound = 1.0 / std::sqrt(static_cast<double>(fan_in));
        for (Eigen::Index i = 0; i < m.size(); ++i)
            m.data()[i] = rng.uniform(-bound, bound);
    };
    fill(params.add("Wx", 4 * h, spec.input), spec.input);
    fill(params.add("Wh", 4 * h, h), h);
    Matrix &b = params.add("b", 4 * h, 1);
    b.block(h, 0, h, 1).setOnes(); // forget gate bias
    fill(params.add("Wy", spec.output, h), h);
    params.add("by", spec.output, 1);
    return params;
}

Matrix lstm_forward(const ParamSet &params, const LstmSpec &spec, const std::vector<Matrix> &sequence,
                    LstmCache *cache) {
    if (sequence.empty())
        throw ShapeError("lstm_forward: empty sequence");
    const int h = spec.hidden;
    const Eigen::Index batch = sequence.front().rows();
    const Matrix &wx = params.at("Wx");
    const Matrix &wh = params.at("Wh");
    const Matrix &b = params.at("b");

    if (cache) {
        *cache = LstmCache{};
        cache->inputs = sequence;
    }

    Matrix h_t = Matrix::Zero(batch, h);
    Matrix c_t = Matrix::Zero(batch, h);
    for (const Matrix &x : sequence) {
        if (x.cols() != spec.input || x.rows() != batch)
            throw ShapeError("lstm_forward: inconsistent sequence element shape");
        Matrix z = x * wx.transpose() + h_t * wh.transpose();
        z.rowwise() += b.col(0).transpose();
        Matrix gi = sigmoid(z.leftCols(h));
        Matrix gf = sigmoid(z.middleCols(h, h));
        Matrix gg = z.middleCols(2 * h, h).array().tanh().matrix();
        Matrix go = sigmoid(z.rightCols(h));
        c_t = (gf.array() * c_t.array() + gi.array() * gg.array()).matrix();
        h_t = (go.array() * c_t.array().tanh()).matrix();
        if (cache) {
            cache->gates_i.push_back(std::move(gi));
            cache->gates_f.push_back(std::move(gf));
            cache->gates_g.push_back(std::move(gg));
            cache->gates_o.push_back(std::move(go));
            cache->cells.push_back(c_t);
            cache->hiddens.push_back(h_t);
        }
    }
    Matrix y = h_t * params.at("Wy").transpose();
    y.rowwise() += params.at("by").col(0).transpose();
    return y;
}

ParamSet lstm_backward(const ParamSet &params, const LstmSpec &spec, const LstmCache &cache, const Matrix &d_out) {
    const int h = spec.hidden;
    const auto steps = cache.inputs.size();
    if (steps == 0 || cache.hiddens.size() != steps)
        throw StateError("lstm_backward: cache is empty (run lstm_forward with a cache first)");
    const Eigen::Index batch = cache.inputs.front().rows();

    const Matrix &wh = params.at("Wh");
    const Matrix &wy = params.at("Wy");

    ParamSet grads;
    Matrix &d_wx = grads.add("Wx", 4 * h, spec.input);
    Matrix &d_wh = grads.add("Wh", 4 * h, h);
    Matrix &d_b = grads.add("b", 4 * h, 1);
    grads.add("Wy", d_out.transpose() * cache.hiddens.back());
    grads.add("by", d_out.colwise().sum().transpose());

    Matrix d_h = d_out * wy;
    Matrix d_c = Matrix::Zero(batch, h);
    for (std::size_t t = steps; t-- > 0;) {
        const Matrix &gi = cache.gates_i[t];
        const Matrix &gf = cache.gates_f[t];
        const Matrix &gg = cache.gates_g[t];
        const Matrix &go = cache.gates_o[t];
        const Matrix &c_t = cache.cells[t];
        const Matrix c_prev = t > 0 ? cache.cells[t - 1] : Matrix::Zero(batch, h);
        const Matrix h_prev = t > 0 ? cache.hiddens[t - 1] : Matrix::Zero(batch, h);

        const Eigen::ArrayXXd tanh_c = c_t.array().tanh();
        Matrix d_zo = (d_h.array() * tanh_c * go.array() * (1.0 - go.array())).matrix();
        d_c.array() += d_h.array() * go.array() * (1.0 - tanh_c.square());
        Matrix d_zf = (d_c.array() * c_prev.array() * gf.array() * (1.0 - gf.array())).matrix();
        Matrix d_zi = (d_c.array() * gg.array() * gi.array() * (1.0 - gi.array())).matrix();
        Matrix d_zg = (d_c.array() * gi.array() * (1.0 - gg.array().square())).matrix();

        Matrix d_z(batch, 4 * h);
        d_z.leftCols(h) = d_zi;
        d_z.middleCols(h, h) = d_zf;
        d_z.middleCols(2 * h, h) = d_zg;
        d_z.rightCols(h) = d_zo;

        d_wx += d_z.transpose() * cache.inputs[t];
        d_wh += d_z.transpose() * h_prev;
        d_b += d_z.colwise().sum().transpose();

        d_h = d_z * wh;
        d_c = (d_c.array() * gf.array()).matrix();
    }
    return grads;
}

} // namespace dtslice::nn
