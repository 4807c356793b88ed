#pragma once

#include <array>
#include <vector>

namespace pkpm {

/// Lagrange shape functions of degree k (1..4) on the reference triangle
/// with vertices V0=(0,0), V1=(1,0), V2=(0,1).
///
/// Nodes are the barycentric lattice points (a/k, b/k, c/k), a+b+c=k, listed
/// in the canonical order shared with the global DOF numbering: the three
/// vertices, then the interior nodes of edges (V0,V1), (V1,V2), (V2,V0) in
/// edge direction, then cell-interior nodes.
class ReferenceElement {
  public:
    explicit ReferenceElement(int degree);

    int degree() const { return degree_; }
    int num_nodes() const { return static_cast<int>(nodes_.size()); }
    const std::vector<std::array<double, 3>>& nodes() const { return nodes_; }

    /// All shape functions at one barycentric point.
    std::vector<double> eval(const std::array<double, 3>& bary) const;

    /// Gradients with respect to the reference coordinates (x, y).
    std::vector<std::array<double, 2>> eval_grad(const std::array<double, 3>& bary) const;

  private:
    int degree_;
    std::vector<std::array<int, 3>> multi_;  ///< lattice multi-index per node
    std::vector<std::array<double, 3>> nodes_;
};

}  // namespace pkpm
