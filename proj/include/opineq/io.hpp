#ifndef OPINEQ_IO_HPP
#define OPINEQ_IO_HPP

#include <cstdio>
#include <string>

#include <json.hpp>

#include "opineq/engine.hpp"
#include "opineq/version.hpp"

namespace opineq {

// ---------------------------------------------------------------------------
// emission: a small writer with floating-point formatting fixed at 17
// significant digits, so reports are byte-identical across runs on one
// platform.
// ---------------------------------------------------------------------------

class JsonWriter {
public:
  std::string str() const { return out_; }

  JsonWriter& begin_object() { return token("{"); }
  JsonWriter& end_object() { return close("}"); }
  JsonWriter& begin_array() { return token("["); }
  JsonWriter& end_array() { return close("]"); }

  JsonWriter& key(const std::string& k) {
    comma();
    out_ += '"' + escape(k) + "\":";
    fresh_ = true;
    return *this;
  }

  JsonWriter& value(double v) {
    comma();
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    out_ += buf;
    return *this;
  }

  JsonWriter& value(int v) { return value(static_cast<long long>(v)); }
  JsonWriter& value(long long v) {
    comma();
    out_ += std::to_string(v);
    return *this;
  }
  JsonWriter& value(std::uint64_t v) {
    comma();
    out_ += std::to_string(v);
    return *this;
  }
  JsonWriter& value(bool v) {
    comma();
    out_ += v ? "true" : "false";
    return *this;
  }
  JsonWriter& value(const std::string& v) {
    comma();
    out_ += '"' + escape(v) + '"';
    return *this;
  }
  JsonWriter& value(const char* v) { return value(std::string(v)); }
  JsonWriter& null() {
    comma();
    out_ += "null";
    return *this;
  }

private:
  JsonWriter& token(const char* t) {
    comma();
    out_ += t;
    fresh_ = true;
    return *this;
  }
  JsonWriter& close(const char* t) {
    out_ += t;
    fresh_ = false;
    return *this;
  }
  void comma() {
    if (!fresh_ && !out_.empty() && out_.back() != '{' && out_.back() != '[' &&
        out_.back() != ':')
      out_ += ',';
    fresh_ = false;
  }
  static std::string escape(const std::string& s) {
    std::string r;
    for (char c : s) {
      if (c == '"' || c == '\\') {
        r += '\\';
        r += c;
      } else if (c == '\n') {
        r += "\\n";
      } else {
        r += c;
      }
    }
    return r;
  }

  std::string out_;
  bool fresh_ = true;
};

inline void write_matrix(JsonWriter& w, const ComplexMatrix& m) {
  w.begin_object();
  if (m.rows() == m.cols()) {
    w.key("n").value(m.rows());
  } else {
    w.key("n_rows").value(m.rows());
    w.key("n_cols").value(m.cols());
  }
  w.key("entries").begin_array();
  for (int i = 0; i < m.rows(); ++i) {
    w.begin_array();
    for (int j = 0; j < m.cols(); ++j) {
      w.begin_array().value(m(i, j).real()).value(m(i, j).imag()).end_array();
    }
    w.end_array();
  }
  w.end_array();
  w.end_object();
}

inline void write_matrix(JsonWriter& w, const HermitianMatrix& m) { write_matrix(w, m.cm()); }

inline void write_map(JsonWriter& w, const MapSpec& phi) {
  w.begin_object();
  w.key("variant").value(phi.variant_name());
  w.key("n_in").value(phi.n_in());
  w.key("n_out").value(phi.n_out());
  if (phi.variant() == MapSpec::Variant::Compression) w.key("k").value(phi.n_out());
  if (phi.variant() == MapSpec::Variant::Pinching) {
    w.key("partition").begin_array();
    for (const auto& block : phi.partition()) {
      w.begin_array();
      for (int i : block) w.value(i);
      w.end_array();
    }
    w.end_array();
  }
  if (phi.variant() == MapSpec::Variant::KrausMixture) {
    w.key("terms").begin_array();
    for (const auto& t : phi.terms()) {
      w.begin_object();
      w.key("weight").value(t.weight);
      w.key("isometry");
      write_matrix(w, t.isometry);
      w.end_object();
    }
    w.end_array();
  }
  w.end_object();
}

inline void write_instance(JsonWriter& w, const Instance& inst) {
  w.begin_object();
  w.key("phi");
  write_map(w, inst.phi);
  w.key("A");
  write_matrix(w, inst.A);
  if (inst.B) {
    w.key("B");
    write_matrix(w, *inst.B);
  }
  if (inst.f) w.key("f").value(inst.f->to_text());
  if (inst.g) w.key("g").value(inst.g->to_text());
  w.key("params").begin_object();
  auto opt = [&](const char* name, const std::optional<double>& v) {
    if (v) w.key(name).value(*v);
  };
  opt("r", inst.params.r);
  opt("p", inst.params.p);
  opt("q", inst.params.q);
  opt("alpha", inst.params.alpha);
  opt("beta", inst.params.beta);
  opt("gamma", inst.params.gamma);
  w.end_object();
  if (inst.bounds) {
    w.key("bounds").begin_object();
    w.key("m").value(inst.bounds->m);
    w.key("M").value(inst.bounds->M);
    w.end_object();
  }
  if (!inst.seq_a.empty()) {
    w.key("seq_a").begin_array();
    for (double x : inst.seq_a) w.value(x);
    w.end_array();
    w.key("seq_b").begin_array();
    for (double x : inst.seq_b) w.value(x);
    w.end_array();
  }
  if (inst.moment_order != 1) w.key("moment_order").value(inst.moment_order);
  w.key("seed").value(inst.seed);
  w.end_object();
}

// Shared report envelope: schema, tool version, config echo, seed, tolerance.
inline void write_envelope(JsonWriter& w, const std::string& command,
                           const std::string& config_echo, std::uint64_t seed,
                           const ToleranceConfig& tol) {
  w.key("schema").value(kReportSchema);
  w.key("tool").begin_object();
  w.key("name").value(kToolName);
  w.key("version").value(kToolVersion);
  w.end_object();
  w.key("command").value(command);
  w.key("config").value(config_echo);
  w.key("seed").value(seed);
  w.key("seed_mixing").value("trial_seed = mix64(seed xor mix64(stream * 0xD1342543DE82EF95 + index))");
  w.key("tolerance").begin_object();
  w.key("atol").value(tol.atol);
  w.key("rtol").value(tol.rtol);
  w.end_object();
}

// ---------------------------------------------------------------------------
// parsing (nlohmann/json); parsers reject non-finite values
// ---------------------------------------------------------------------------

inline ComplexMatrix parse_matrix(const nlohmann::json& j) {
  int rows = 0, cols = 0;
  if (j.contains("n")) {
    rows = cols = j.at("n").get<int>();
  } else {
    rows = j.at("n_rows").get<int>();
    cols = j.at("n_cols").get<int>();
  }
  const auto& e = j.at("entries");
  if (static_cast<int>(e.size()) != rows) throw parse_error("matrix row count mismatch");
  ComplexMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (static_cast<int>(e[i].size()) != cols) throw parse_error("matrix column count mismatch");
    for (int jx = 0; jx < cols; ++jx) {
      const auto& z = e[i][jx];
      const double re = z.at(0).get<double>();
      const double im = z.at(1).get<double>();
      if (!std::isfinite(re) || !std::isfinite(im))
        throw parse_error("non-finite matrix entry");
      m(i, jx) = cplx(re, im);
    }
  }
  return m;
}

inline HermitianMatrix parse_hermitian(const nlohmann::json& j) {
  return HermitianMatrix(parse_matrix(j));
}

inline MapSpec parse_map(const nlohmann::json& j) {
  const std::string variant = j.at("variant").get<std::string>();
  const int n_in = j.at("n_in").get<int>();
  if (variant == "compression") return MapSpec::compression(n_in, j.at("k").get<int>());
  if (variant == "normalized_trace")
    return MapSpec::normalized_trace(n_in, j.value("n_out", n_in));
  if (variant == "pinching") {
    std::vector<std::vector<int>> part;
    for (const auto& b : j.at("partition")) part.push_back(b.get<std::vector<int>>());
    return MapSpec::pinching(n_in, std::move(part));
  }
  if (variant == "kraus_mixture") {
    std::vector<MapSpec::KrausTerm> terms;
    for (const auto& t : j.at("terms")) {
      MapSpec::KrausTerm kt;
      kt.weight = t.at("weight").get<double>();
      kt.isometry = parse_matrix(t.at("isometry"));
      terms.push_back(std::move(kt));
    }
    return MapSpec::kraus_mixture(n_in, j.at("n_out").get<int>(), std::move(terms));
  }
  throw parse_error("unknown map variant: " + variant);
}

inline Instance parse_instance(const nlohmann::json& j) {
  Instance inst;
  inst.phi = parse_map(j.at("phi"));
  inst.A = parse_hermitian(j.at("A"));
  if (j.contains("B")) inst.B = parse_hermitian(j.at("B"));
  if (j.contains("f")) inst.f = ScalarFn::parse(j.at("f").get<std::string>());
  if (j.contains("g")) inst.g = ScalarFn::parse(j.at("g").get<std::string>());
  if (j.contains("params")) {
    const auto& p = j.at("params");
    auto opt = [&](const char* name) -> std::optional<double> {
      if (p.contains(name)) return p.at(name).get<double>();
      return std::nullopt;
    };
    inst.params.r = opt("r");
    inst.params.p = opt("p");
    inst.params.q = opt("q");
    inst.params.alpha = opt("alpha");
    inst.params.beta = opt("beta");
    inst.params.gamma = opt("gamma");
  }
  if (j.contains("bounds"))
    inst.bounds = SpectralBounds(j.at("bounds").at("m").get<double>(),
                                 j.at("bounds").at("M").get<double>());
  if (j.contains("seq_a")) inst.seq_a = j.at("seq_a").get<std::vector<double>>();
  if (j.contains("seq_b")) inst.seq_b = j.at("seq_b").get<std::vector<double>>();
  inst.moment_order = j.value("moment_order", 1);
  inst.seed = j.value("seed", static_cast<std::uint64_t>(0));
  return inst;
}

} // namespace opineq

#endif
