#include "hjc/json_io.hpp"

#include <stdexcept>
#include <vector>

namespace hjc {

namespace {

json matrix_to_json(const Eigen::MatrixXcd& m, int dim) {
  std::vector<double> re, im;
  re.reserve(static_cast<std::size_t>(m.size()));
  im.reserve(static_cast<std::size_t>(m.size()));
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      re.push_back(m(i, j).real());
      im.push_back(m(i, j).imag());
    }
  }
  return json{{"dim", dim}, {"real", re}, {"imag", im}};
}

}  // namespace

json to_json(const AlgebraElement& e) {
  return json{{"tag", std::string(to_string(e.tag()))},
              {"coeffs", std::vector<double>(e.coeffs().begin(), e.coeffs().end())}};
}

AlgebraElement algebra_element_from_json(const json& j) {
  try {
    const AlgebraTag tag = parse_algebra_tag(j.at("tag").get<std::string>());
    const auto coeffs = j.at("coeffs").get<std::vector<double>>();
    return AlgebraElement(tag, coeffs);
  } catch (const json::exception& ex) {
    throw std::invalid_argument(std::string("algebra_element_from_json: ") + ex.what());
  }
}

json to_json(const FockOperator& op) { return matrix_to_json(op.matrix(), op.dim()); }

json to_json(const BlockOperator& op) {
  json j = matrix_to_json(op.flat(), op.dim());
  j["size"] = op.size();
  return j;
}

FockOperator fock_operator_from_json(const json& j) {
  try {
    const int d = j.at("dim").get<int>();
    const auto re = j.at("real").get<std::vector<double>>();
    const auto im = j.at("imag").get<std::vector<double>>();
    if (d < 1 || re.size() != static_cast<std::size_t>(d * d) || im.size() != re.size()) {
      throw std::invalid_argument("fock_operator_from_json: array length does not match dim^2");
    }
    Eigen::MatrixXcd m(d, d);
    for (int i = 0; i < d; ++i)
      for (int k = 0; k < d; ++k) {
        const auto idx = static_cast<std::size_t>(i * d + k);
        m(i, k) = {re[idx], im[idx]};
      }
    return FockOperator(std::move(m));
  } catch (const json::exception& ex) {
    throw std::invalid_argument(std::string("fock_operator_from_json: ") + ex.what());
  }
}

json to_json(const SectorEntry& e) {
  return json{{"chart", std::string(to_string(e.chart))},
              {"row", e.row},
              {"level", e.level},
              {"denominator", e.denominator},
              {"singular", e.singular},
              {"ill_conditioned", e.ill_conditioned}};
}

json to_json(const SectorReport& r, int lattice_levels) {
  json singular = json::array();
  for (const auto& e : r.singular()) singular.push_back(to_json(e));
  json lattice = json::array();
  for (const auto& s : string_lattice(r, lattice_levels)) {
    lattice.push_back({{"level_pair", {s.upper_level, s.lower_level}},
                       {"color", s.black ? "black" : "white"}});
  }
  return json{{"theta", r.theta},
              {"dim", r.dim},
              {"degenerate", r.degenerate()},
              {"singular", singular},
              {"string_levels", r.string_levels()},
              {"lattice", lattice}};
}

json to_json(const oracle::ResidualReport& r) {
  return json{{"metric", r.metric == oracle::Metric::MaxAbs ? "max_abs" : "frobenius"},
              {"value", r.value},
              {"margin", r.margin},
              {"tolerance", r.tolerance},
              {"pass", r.pass}};
}

}  // namespace hjc
