#pragma once

#include <Eigen/Core>

#include <functional>
#include <optional>
#include <string>

namespace iurlab {

/// Axis-aligned box. Invariants: dimension >= 1 and lower[j] < upper[j].
class SearchSpace {
public:
    SearchSpace(Eigen::VectorXd lower, Eigen::VectorXd upper);

    static SearchSpace cube(Eigen::Index dimension, double lower, double upper);

    Eigen::Index dimension() const { return lower_.size(); }
    const Eigen::VectorXd& lower() const { return lower_; }
    const Eigen::VectorXd& upper() const { return upper_; }
    Eigen::VectorXd width() const { return upper_ - lower_; }
    Eigen::VectorXd center() const { return 0.5 * (upper_ + lower_); }

    template <typename Derived>
    bool contains(const Eigen::MatrixBase<Derived>& x) const
    {
        return x.size() == dimension() && (x.array() >= lower_.array()).all() &&
               (x.array() <= upper_.array()).all();
    }

    /// Coordinate-wise projection onto the box.
    template <typename Derived>
    void clamp(Eigen::MatrixBase<Derived>& x) const
    {
        x = x.cwiseMax(lower_).cwiseMin(upper_);
    }

    template <typename Derived>
    Eigen::VectorXd clamped(const Eigen::MatrixBase<Derived>& x) const
    {
        return x.cwiseMax(lower_).cwiseMin(upper_);
    }

private:
    Eigen::VectorXd lower_;
    Eigen::VectorXd upper_;
};

/// A box-bounded minimization problem with known optimum value.
///
/// `codomain_bits` is H(f(x)), the number of bits acquired per evaluation
/// under the i.i.d. discrete-codomain model used for IUR denominators.
class ObjectiveProblem {
public:
    using Evaluator = std::function<double(const Eigen::Ref<const Eigen::VectorXd>&)>;

    ObjectiveProblem(std::string name, SearchSpace space, Evaluator evaluator,
                     double optimum_value = 0.0, double codomain_bits = 32.0);

    const std::string& name() const { return name_; }
    const SearchSpace& space() const { return space_; }
    Eigen::Index dimension() const { return space_.dimension(); }
    double optimum_value() const { return optimum_value_; }
    double codomain_bits() const { return codomain_bits_; }
    void set_codomain_bits(double bits);

    double evaluate(const Eigen::Ref<const Eigen::VectorXd>& x) const { return evaluator_(x); }
    double operator()(const Eigen::Ref<const Eigen::VectorXd>& x) const { return evaluator_(x); }
    double error(double value) const { return value - optimum_value_; }

private:
    std::string name_;
    SearchSpace space_;
    Evaluator evaluator_;
    double optimum_value_;
    double codomain_bits_;
};

struct Solution {
    Eigen::VectorXd position;
    std::optional<double> value;
};

} // namespace iurlab
