#include "leonard/system.hpp"

#include <algorithm>

namespace leonard {

namespace {

std::vector<Scalar> distinct_eigenvalues(const Matrix& m, const char* name) {
  const auto roots = field_roots(char_poly(m));
  if (roots.size() != m.size()) {
    throw Error(ErrorCode::NotMultiplicityFree, std::string(name) + " has eigenvalues outside " + m.field().to_string());
  }
  for (std::size_t i = 1; i < roots.size(); ++i) {
    if (roots[i] == roots[i - 1]) {
      throw Error(ErrorCode::NotMultiplicityFree, std::string(name) + " has repeated eigenvalue " + roots[i].to_string());
    }
  }
  return roots;
}

// The vertices of the support graph (edge i-j iff E_i X E_j ≠ 0, i ≠ j) in
// path order starting from the smaller-index endpoint; throws unless the
// graph is a simple path on all vertices.
std::vector<std::size_t> path_order(const std::vector<Matrix>& E, const Matrix& X, const char* name) {
  const std::size_t n = E.size();
  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Matrix left = mat_mul(E[i], X);
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && !mat_mul(left, E[j]).is_zero()) adj[i].push_back(j);
    }
  }
  std::size_t edges = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (adj[i].size() > 2) throw Error(ErrorCode::NotTridiagonalizable, std::string(name) + " support graph has a vertex of degree > 2");
    edges += adj[i].size();
  }
  if (edges != 2 * (n - 1)) throw Error(ErrorCode::NotTridiagonalizable, std::string(name) + " support graph is not a path");
  std::size_t start = 0;
  while (n > 1 && adj[start].size() != 1) ++start;
  std::vector<std::size_t> order{start};
  std::vector<bool> seen(n, false);
  seen[start] = true;
  while (order.size() < n) {
    std::size_t next = n;
    for (std::size_t j : adj[order.back()]) {
      if (!seen[j]) next = j;
    }
    if (next == n) throw Error(ErrorCode::NotTridiagonalizable, std::string(name) + " support graph is disconnected");
    seen[next] = true;
    order.push_back(next);
  }
  return order;
}

template <class T>
std::vector<T> permute(const std::vector<T>& v, const std::vector<std::size_t>& order) {
  std::vector<T> out;
  for (std::size_t k : order) out.push_back(v[k]);
  return out;
}

}  // namespace

RecognitionResult recognize_leonard_pair(const Matrix& A, const Matrix& A_star) {
  if (A.size() != A_star.size()) throw Error(ErrorCode::DimensionMismatch, "A and A* differ in size");
  if (!(A.field() == A_star.field())) throw Error(ErrorCode::FieldMismatch, "A and A* differ in field");
  const auto eig = distinct_eigenvalues(A, "A");
  const auto eig_star = distinct_eigenvalues(A_star, "A*");
  const auto E = idempotents_lagrange(A, eig);
  const auto E_star = idempotents_lagrange(A_star, eig_star);
  const auto order = path_order(E, A_star, "A");
  const auto order_star = path_order(E_star, A, "A*");

  RecognitionResult result;
  for (bool rev : {false, true}) {
    for (bool rev_star : {false, true}) {
      if (A.size() == 1 && (rev || rev_star)) continue;
      auto o = order;
      auto os = order_star;
      if (rev) std::reverse(o.begin(), o.end());
      if (rev_star) std::reverse(os.begin(), os.end());
      LeonardSystemRep rep;
      rep.field = A.field();
      rep.d = static_cast<int>(A.size()) - 1;
      rep.A = A;
      rep.A_star = A_star;
      rep.E = permute(E, o);
      rep.E_star = permute(E_star, os);
      rep.theta = permute(eig, o);
      rep.theta_star = permute(eig_star, os);
      RecognizedSystem sys;
      sys.params = extract_parameters(rep);
      sys.theta = rep.theta;
      sys.theta_star = rep.theta_star;
      sys.rep = std::move(rep);
      result.systems.push_back(std::move(sys));
    }
  }
  return result;
}

}  // namespace leonard
