#include "fovir/model.hpp"

#include <cmath>
#include <stdexcept>

namespace fovir {

namespace {

struct ParamEntry {
  Param id;
  std::string_view name;
  double ModelParams::*field;
};

constexpr std::array<ParamEntry, 12> kParamTable{{
    {Param::Lambda, "lambda", &ModelParams::lambda},
    {Param::Beta, "beta", &ModelParams::beta},
    {Param::Mu, "mu", &ModelParams::mu},
    {Param::K, "k", &ModelParams::k},
    {Param::Delta, "delta", &ModelParams::delta},
    {Param::N, "N", &ModelParams::N},
    {Param::C, "c", &ModelParams::c},
    {Param::Q, "q", &ModelParams::q},
    {Param::Sigma, "sigma", &ModelParams::sigma},
    {Param::Epsilon, "epsilon", &ModelParams::epsilon},
    {Param::A, "a", &ModelParams::a},
    {Param::Alpha, "alpha", &ModelParams::alpha},
}};

const ParamEntry& entry(Param p) { return kParamTable[static_cast<std::size_t>(p)]; }

// Rates raised to alpha.
struct Rates {
  double lambda, beta, mu, k, delta, c, q, sigma;
  double N, epsilon, a;

  explicit Rates(const ModelParams& p)
      : lambda(std::pow(p.lambda, p.alpha)),
        beta(std::pow(p.beta, p.alpha)),
        mu(std::pow(p.mu, p.alpha)),
        k(std::pow(p.k, p.alpha)),
        delta(std::pow(p.delta, p.alpha)),
        c(std::pow(p.c, p.alpha)),
        q(std::pow(p.q, p.alpha)),
        sigma(std::pow(p.sigma, p.alpha)),
        N(p.N),
        epsilon(p.epsilon),
        a(p.a) {}

  double f(ProliferationKind kind, double I, double C) const {
    switch (kind) {
      case ProliferationKind::F1:
        return q * I * C;
      case ProliferationKind::F2:
        return q * I;
      case ProliferationKind::F3:
        return q * I * C / (epsilon * C + 1.0);
      case ProliferationKind::F4:
        return q * I / (a + epsilon * I);
    }
    throw std::logic_error("unknown proliferation kind");
  }

  Vec4 field(double T, double I, double V, double C, ProliferationKind kind) const {
    const double infection = beta * V * T;
    return {lambda - infection - mu * T, infection - k * I * C - delta * I,
            N * delta * I - c * V, f(kind, I, C) - sigma * C};
  }
};

}  // namespace

void ModelParams::validate() const {
  for (const auto& e : kParamTable) {
    const double v = this->*e.field;
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw std::invalid_argument("parameter '" + std::string(e.name) +
                                  "' must be positive and finite");
    }
  }
  if (alpha > 1.0) {
    throw std::invalid_argument("parameter 'alpha' must lie in (0, 1]");
  }
}

std::optional<Param> parse_param(std::string_view name) {
  for (const auto& e : kParamTable) {
    if (e.name == name) return e.id;
  }
  return std::nullopt;
}

std::string_view param_name(Param p) { return entry(p).name; }

double get_param(const ModelParams& params, Param p) { return params.*(entry(p).field); }

void set_param(ModelParams& params, Param p, double value) { params.*(entry(p).field) = value; }

const std::vector<Param>& all_params() {
  static const std::vector<Param> params = [] {
    std::vector<Param> out;
    for (const auto& e : kParamTable) out.push_back(e.id);
    return out;
  }();
  return params;
}

State default_initial_state() { return {1000.0, 0.0, 10.0, 333.0}; }

std::optional<ProliferationKind> parse_kind(std::string_view name) {
  if (name == "f1" || name == "F1") return ProliferationKind::F1;
  if (name == "f2" || name == "F2") return ProliferationKind::F2;
  if (name == "f3" || name == "F3") return ProliferationKind::F3;
  if (name == "f4" || name == "F4") return ProliferationKind::F4;
  return std::nullopt;
}

std::string_view kind_name(ProliferationKind kind) {
  switch (kind) {
    case ProliferationKind::F1:
      return "f1";
    case ProliferationKind::F2:
      return "f2";
    case ProliferationKind::F3:
      return "f3";
    case ProliferationKind::F4:
      return "f4";
  }
  return "?";
}

const std::vector<ProliferationKind>& all_kinds() {
  static const std::vector<ProliferationKind> kinds{ProliferationKind::F1, ProliferationKind::F2,
                                                    ProliferationKind::F3, ProliferationKind::F4};
  return kinds;
}

double proliferation(ProliferationKind kind, double infected, double ctl,
                     const ModelParams& params) {
  return Rates(params).f(kind, infected, ctl);
}

Vec4 rhs(const State& s, const ModelParams& params, ProliferationKind kind) {
  return Rates(params).field(s.T, s.I, s.V, s.C, kind);
}

Vec4 boundary_fluxes(const State& s, const ModelParams& params, ProliferationKind kind) {
  const Rates r(params);
  return {r.field(0.0, s.I, s.V, s.C, kind)[0], r.field(s.T, 0.0, s.V, s.C, kind)[1],
          r.field(s.T, s.I, 0.0, s.C, kind)[2], r.field(s.T, s.I, s.V, 0.0, kind)[3]};
}

VectorField<4> make_vector_field(const ModelParams& params, ProliferationKind kind) {
  params.validate();
  return [rates = Rates(params), kind](double, const Vec4& y) {
    return rates.field(y[0], y[1], y[2], y[3], kind);
  };
}

}  // namespace fovir
