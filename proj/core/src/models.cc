#include "distvar/models.h"

#include <array>

namespace distvar {
namespace {

constexpr std::array<ModelInfo, 5> kModels{{
    {ModelId::kF, "F", "fundamental matrices", 7, 3},
    {ModelId::kE, "E", "essential matrices", 5, 10},
    {ModelId::kG, "G", "essential matrices with one unknown focal length on both cameras", 6, 15},
    {ModelId::kGprime, "Gprime", "essential matrices times diag(1/f,1/f,1) on the right", 6, 9},
    {ModelId::kGdoubleprime, "Gdoubleprime", "diag(1/f,1/f,1) times essential matrices (transpose of Gprime)", 6, 9},
}};

constexpr std::string_view kQuintic =
    "x11*x13^3*x31 + x13^2*x21*x23*x31 + x11*x13*x23^2*x31 + x21*x23^3*x31 - x11*x13*x31^3 - x21*x23*x31^3"
    " + x12*x13^3*x32 + x13^2*x22*x23*x32 + x12*x13*x23^2*x32 + x22*x23^3*x32 - x12*x13*x31^2*x32"
    " - x12^2*x13^2*x33 - x11*x13*x31*x32^2 - x21*x23*x31*x32^2 - x12*x13*x32^3 - x22*x23*x32^3"
    " - x11^2*x13^2*x33 - x22*x23*x31^2*x32 - 2*x11*x13*x21*x23*x33 - 2*x12*x13*x22*x23*x33"
    " - x21^2*x23^2*x33 - x22^2*x23^2*x33 + x11^2*x31^2*x33 + x21^2*x31^2*x33"
    " + 2*x11*x12*x31*x32*x33 + 2*x21*x22*x31*x32*x33 + x12^2*x32^2*x33 + x22^2*x32^2*x33";

template <class D>
using Matrix = std::array<std::array<Polynomial<D>, 3>, 3>;

template <class D>
Matrix<D> symbol_matrix(const D& d) {
  Matrix<D> x;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) x[i][j] = Polynomial<D>::variable(d, 9, 3 * i + j);
  }
  return x;
}

template <class D>
Matrix<D> multiply(const Matrix<D>& a, const Matrix<D>& b) {
  Matrix<D> c;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j] + a[i][2] * b[2][j];
    }
  }
  return c;
}

template <class D>
Matrix<D> transpose(const Matrix<D>& a) {
  Matrix<D> t;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) t[i][j] = a[j][i];
  }
  return t;
}

template <class D>
Polynomial<D> det3(const Polynomial<D>* c0, const Polynomial<D>* c1, const Polynomial<D>* c2) {
  // Columns given as arrays of three entries.
  return c0[0] * (c1[1] * c2[2] - c1[2] * c2[1]) - c1[0] * (c0[1] * c2[2] - c0[2] * c2[1]) +
         c2[0] * (c0[1] * c1[2] - c0[2] * c1[1]);
}

template <class D>
Polynomial<D> determinant(const Matrix<D>& x) {
  const Polynomial<D> c0[3] = {x[0][0], x[1][0], x[2][0]};
  const Polynomial<D> c1[3] = {x[0][1], x[1][1], x[2][1]};
  const Polynomial<D> c2[3] = {x[0][2], x[1][2], x[2][2]};
  return det3(c0, c1, c2);
}

template <class D>
std::vector<Polynomial<D>> focal_minors(const D& d, const Matrix<D>& x) {
  const Polynomial<D> c0[3] = {x[0][0], x[1][0], x[2][0]};
  const Polynomial<D> c1[3] = {x[0][1], x[1][1], x[2][1]};
  const Polynomial<D> c2[3] = {x[0][2], x[1][2], x[2][2]};
  const Polynomial<D> c3[3] = {x[1][0] * x[2][0] + x[1][1] * x[2][1] + x[1][2] * x[2][2],
                               -(x[0][0] * x[2][0] + x[0][1] * x[2][1] + x[0][2] * x[2][2]),
                               Polynomial<D>(d, 9)};
  return {det3(c0, c1, c2), det3(c0, c1, c3), det3(c0, c2, c3), det3(c1, c2, c3)};
}

}  // namespace

const ModelInfo& model_info(ModelId id) { return kModels[static_cast<std::size_t>(id)]; }

std::vector<ModelId> all_models() {
  return {ModelId::kF, ModelId::kE, ModelId::kG, ModelId::kGprime, ModelId::kGdoubleprime};
}

ModelId parse_model_id(std::string_view text) {
  if (text == "F") return ModelId::kF;
  if (text == "E") return ModelId::kE;
  if (text == "G") return ModelId::kG;
  if (text == "Gprime" || text == "G'") return ModelId::kGprime;
  if (text == "Gdoubleprime" || text == "G''") return ModelId::kGdoubleprime;
  throw ParseError("unknown model '" + std::string(text) + "' (expected F, E, G, Gprime, Gdoubleprime)");
}

const std::vector<std::string>& matrix_variable_names() {
  static const std::vector<std::string> names{"x11", "x12", "x13", "x21", "x22", "x23", "x31", "x32", "x33"};
  return names;
}

std::string_view g_quintic_text() { return kQuintic; }

template <ExactDomain D>
Ideal<D> model_ideal(ModelId id, const D& domain) {
  const Matrix<D> x = symbol_matrix(domain);
  Ideal<D> ideal(domain, 9);
  switch (id) {
    case ModelId::kF:
      ideal.add(determinant(x));
      break;
    case ModelId::kE: {
      ideal.add(determinant(x));
      const Matrix<D> xxt = multiply(x, transpose(x));
      const Matrix<D> cubic = multiply(xxt, x);
      const Polynomial<D> trace = xxt[0][0] + xxt[1][1] + xxt[2][2];
      const auto two = Polynomial<D>::constant(domain, 9, domain.from_int(2));
      for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) ideal.add(two * cubic[i][j] - trace * x[i][j]);
      }
      break;
    }
    case ModelId::kG:
      ideal.add(determinant(x));
      ideal.add(parse_polynomial(domain, kQuintic, matrix_variable_names()));
      break;
    // The 3x4 minors vanish on diag(1/f,1/f,1)*E; G' is the family E*diag(1/f,1/f,1).
    case ModelId::kGprime:
      for (auto& g : focal_minors(domain, transpose(x))) ideal.add(std::move(g));
      break;
    case ModelId::kGdoubleprime:
      for (auto& g : focal_minors(domain, x)) ideal.add(std::move(g));
      break;
  }
  return ideal;
}

ConfigKind parse_config_kind(std::string_view text) {
  if (text == "u_both") return ConfigKind::kUBoth;
  if (text == "v_right") return ConfigKind::kVRight;
  if (text == "two_param") return ConfigKind::kTwoParam;
  if (text == "four_param") return ConfigKind::kFourParam;
  throw ParseError("unknown configuration '" + std::string(text) +
                   "' (expected u_both, v_right, two_param, four_param)");
}

std::string_view config_kind_name(ConfigKind kind) {
  switch (kind) {
    case ConfigKind::kUBoth:
      return "u_both";
    case ConfigKind::kVRight:
      return "v_right";
    case ConfigKind::kTwoParam:
      return "two_param";
    case ConfigKind::kFourParam:
      return "four_param";
  }
  return "";
}

ModelConfig model_config(ModelId, ConfigKind which) {
  using P = MultiParamConfig::Point;
  switch (which) {
    case ConfigKind::kUBoth:
      return DistortionVector({0, 0, 1, 0, 0, 1, 1, 1, 2});
    case ConfigKind::kVRight:
      return DistortionVector({0, 0, 1, 0, 0, 1, 0, 0, 1});
    case ConfigKind::kTwoParam: {
      const std::vector<P> zero{{0, 0}};
      const std::vector<P> first{{0, 0}, {1, 0}};
      const std::vector<P> second{{0, 0}, {0, 1}};
      const std::vector<P> both{{0, 0}, {1, 0}, {0, 1}, {1, 1}};
      return MultiParamConfig(2, {zero, zero, first, zero, zero, first, second, second, both});
    }
    case ConfigKind::kFourParam: {
      const std::vector<P> zero{{0, 0, 0, 0}};
      const std::vector<P> first{{0, 0, 0, 0}, {1, 0, 0, 0}, {0, 0, 1, 0}};
      const std::vector<P> second{{0, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}};
      // u33 is the product of the camera-1 and camera-2 supports.
      const std::vector<P> both{{0, 0, 0, 0}, {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1},
                                {1, 1, 0, 0}, {1, 0, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
      return MultiParamConfig(4, {zero, zero, first, zero, zero, first, second, second, both});
    }
  }
  throw RangeError("unknown configuration kind");
}

template Ideal<PrimeField> model_ideal(ModelId, const PrimeField&);
template Ideal<RationalField> model_ideal(ModelId, const RationalField&);

}  // namespace distvar
