#include "starq/operators.hpp"

#include <stdexcept>

namespace starq {

LinOp op_identity() {
  return LinOp([](const Symbol& F) { return F; });
}

LinOp op_zero() {
  return LinOp([](const Symbol& F) { return Symbol(F.dim()); });
}

LinOp op_euler() {
  return LinOp([](const Symbol& F) { return F.euler(); });
}

LinOp op_euler_hat() {
  return LinOp([](const Symbol& F) { return F.euler_hat(); });
}

LinOp op_divergence() {
  return LinOp([](const Symbol& F) { return divergence(F); });
}

LinOp op_dx(int i) {
  return LinOp([i](const Symbol& F) { return F.diff_x(i); });
}

LinOp op_dxi(int i) {
  return LinOp([i](const Symbol& F) { return F.diff_xi(i); });
}

LinOp op_mult(const Symbol& F) {
  return LinOp([F](const Symbol& G) { return F * G; });
}

LinOp op_lift(const VectorField& X) {
  Symbol J = moment(X);
  return LinOp([J](const Symbol& F) { return poisson(J, F); });
}

namespace {

void require_metric(const std::vector<int>& metric) {
  if (metric.empty())
    throw std::invalid_argument("conformal operator requires a metric");
  for (int e : metric)
    if (e != 1 && e != -1)
      throw std::invalid_argument("metric entries must be +-1");
}

}  // namespace

LinOp op_R(const std::vector<int>& metric) {
  require_metric(metric);
  return LinOp([metric](const Symbol& F) {
    int n = F.dim();
    Symbol r2(n);
    for (int i = 1; i <= n; ++i)
      r2 += Rational(metric[i - 1]) * (Symbol::xi(n, i) * Symbol::xi(n, i));
    return r2 * F;
  });
}

LinOp op_T(const std::vector<int>& metric) {
  require_metric(metric);
  return LinOp([metric](const Symbol& F) {
    Symbol r(F.dim());
    for (int i = 1; i <= F.dim(); ++i)
      r += Rational(metric[i - 1]) * F.diff_xi(i).diff_xi(i);
    return r;
  });
}

LinOp op_G(const std::vector<int>& metric) {
  require_metric(metric);
  return LinOp([metric](const Symbol& F) {
    int n = F.dim();
    Symbol r(n);
    for (int i = 1; i <= n; ++i)
      r += Rational(metric[i - 1]) * (Symbol::xi(n, i) * F.diff_x(i));
    return r;
  });
}

LinOp op_Delta(const std::vector<int>& metric) {
  require_metric(metric);
  return LinOp([metric](const Symbol& F) {
    Symbol r(F.dim());
    for (int i = 1; i <= F.dim(); ++i)
      r += Rational(metric[i - 1]) * F.diff_x(i).diff_x(i);
    return r;
  });
}

LinOp op_R0(const std::vector<int>& metric) {
  return compose(op_R(metric), op_T(metric));
}

LinOp op_G0(const std::vector<int>& metric) {
  return compose(op_G(metric), op_T(metric));
}

LinOp op_Delta0(const std::vector<int>& metric) {
  return compose(op_Delta(metric), op_T(metric));
}

LinOp compose(const LinOp& A, const LinOp& B) {
  return LinOp([A, B](const Symbol& F) { return A(B(F)); });
}

LinOp operator+(const LinOp& A, const LinOp& B) {
  return LinOp([A, B](const Symbol& F) { return A(F) + B(F); });
}

LinOp operator-(const LinOp& A, const LinOp& B) {
  return LinOp([A, B](const Symbol& F) { return A(F) - B(F); });
}

LinOp scale(const Rational& c, const LinOp& A) {
  return LinOp([c, A](const Symbol& F) { return c * A(F); });
}

LinOp commutator(const LinOp& A, const LinOp& B) {
  return LinOp([A, B](const Symbol& F) { return A(B(F)) - B(A(F)); });
}

std::vector<Exponents> monomial_basis(int n, const Bounds& b) {
  std::vector<std::vector<int>> xs = multi_indices(n, b.x_max);
  std::vector<std::vector<int>> xis = multi_indices(n, b.xi_max);
  std::vector<Exponents> basis;
  basis.reserve(xs.size() * xis.size() * (b.nu_max + 1));
  for (const auto& a : xs)
    for (const auto& bb : xis)
      for (int p = 0; p <= b.nu_max; ++p) {
        Exponents e;
        e.x = a;
        e.xi = bb;
        e.nu = p;
        basis.push_back(std::move(e));
      }
  return basis;
}

OpTable::OpTable(const LinOp& op, int n, const Bounds& b) {
  for (const auto& e : monomial_basis(n, b)) {
    Symbol mono(n);
    mono.add_term(e, Rational(1));
    images_.emplace_back(e, op(mono));
  }
}

bool OpTable::is_zero() const {
  for (const auto& [e, img] : images_)
    if (!img.is_zero()) return false;
  return true;
}

std::optional<Exponents> OpTable::nonzero_witness() const {
  for (const auto& [e, img] : images_)
    if (!img.is_zero()) return e;
  return std::nullopt;
}

OpTable commutator_table(const LinOp& A, const LinOp& B, int n,
                         const Bounds& b) {
  return OpTable(commutator(A, B), n, b);
}

CommutantReport commutant_check(const GeneratorFamily& family,
                                const LinOp& candidate, const Bounds& b) {
  CommutantReport rep;
  for (std::size_t g = 0; g < family.members.size(); ++g) {
    OpTable t = commutator_table(op_lift(family.members[g]), candidate,
                                 family.n, b);
    if (auto w = t.nonzero_witness()) {
      rep.commutes = false;
      rep.witness = *w;
      rep.generator_index = static_cast<int>(g);
      return rep;
    }
  }
  return rep;
}

}  // namespace starq
