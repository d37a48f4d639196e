// bare_susceptibility.hpp — Closed-form bare matter response χ̃_rs,0(ω) with labelled indices

#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "cavlr/frequency.hpp"

namespace cavlr {

// The matter response of the mean-field effective Hamiltonian, as a labelled
// square-matrix evaluator. Labels name the collective operators (conventionally
// 'x' for the one entering the light-matter coupling).
struct BareSusceptibility {
    std::vector<char> labels;
    std::function<Eigen::MatrixXcd(ComplexFrequency)> eval;

    int index_of(char label) const {
        for (std::size_t i = 0; i < labels.size(); ++i)
            if (labels[i] == label) return static_cast<int>(i);
        throw std::invalid_argument(std::string("BareSusceptibility: no label '") + label + "'");
    }

    Eigen::MatrixXcd operator()(ComplexFrequency w) const {
        Eigen::MatrixXcd m = eval(w);
        if (m.rows() != m.cols() || m.rows() != static_cast<Eigen::Index>(labels.size()))
            throw std::logic_error("BareSusceptibility: matrix dimension must equal label count");
        return m;
    }
};

} // namespace cavlr
