#include "vcoh/scenario.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "vcoh/measurement.hpp"

namespace vcoh {

AmplitudeVector InitialState::toAmplitudes() const {
  if (!usePhases) return explicitAmplitudes;
  return {std::cos(alpha), std::polar(std::sin(alpha), beta), 0.0};
}

void Scenario::validate() const {
  params.validate();
  strengths.validate();
  if (!initial.usePhases) {
    const AmplitudeVector& a = initial.explicitAmplitudes;
    if (!a.finite()) throw Error(ErrorCode::InvalidArgument, "non-finite initial amplitudes");
    if (std::abs(a.norm2() - 1.0) > 1e-10)
      throw Error(ErrorCode::InvalidArgument, "explicit initial amplitudes are not normalized");
  } else if (!std::isfinite(initial.alpha) || !std::isfinite(initial.beta)) {
    throw Error(ErrorCode::InvalidArgument, "alpha and beta must be finite");
  }
  if (!(grid.tMax > 0.0) || !std::isfinite(grid.tMax))
    throw Error(ErrorCode::InvalidArgument, "t_max must be positive");
  if (grid.numPoints < 2) throw Error(ErrorCode::InvalidArgument, "num_points must be >= 2");
}

CoherenceSeries runScenario(const Scenario& s) {
  s.validate();
  const AmplitudeVector initial = s.initial.toAmplitudes();
  CoherenceSeries out;
  out.reserve(static_cast<size_t>(s.grid.numPoints));
  for (int k = 0; k < s.grid.numPoints; ++k) {
    const double t = s.grid.at(k);
    SeriesPoint pt;
    pt.t = t;
    pt.rho = protocolState(initial, s.params, s.strengths, t);
    pt.xi = l1Coherence(pt.rho);
    out.push_back(pt);
  }
  return out;
}

std::string formatDouble(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

double parseDouble(std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) text.remove_suffix(1);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double v = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || res.ec != std::errc{} || res.ptr != text.data() + text.size())
    throw Error(ErrorCode::Parse, "not a number: '" + std::string(text) + "'");
  return v;
}

namespace {

std::string_view trim(std::string_view s) {
  const auto ws = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
  while (!s.empty() && ws(s.front())) s.remove_prefix(1);
  while (!s.empty() && ws(s.back())) s.remove_suffix(1);
  return s;
}

[[noreturn]] void parseError(int line, const std::string& msg) {
  throw Error(ErrorCode::Parse, "line " + std::to_string(line) + ": " + msg);
}

std::vector<double> parseNumbers(const KeyValue& kv) {
  std::vector<double> out;
  std::string_view rest = kv.value;
  while (true) {
    rest = trim(rest);
    if (rest.empty()) break;
    const size_t end = rest.find_first_of(" \t,");
    const std::string_view tok = rest.substr(0, end);
    try {
      out.push_back(parseDouble(tok));
    } catch (const Error& e) {
      parseError(kv.line, kv.key + ": " + e.what());
    }
    if (end == std::string_view::npos) break;
    rest.remove_prefix(end + 1);
  }
  return out;
}

double scalar(const KeyValue& kv) {
  const auto v = parseNumbers(kv);
  if (v.size() != 1) parseError(kv.line, kv.key + " expects exactly one number");
  return v[0];
}

cplx complexValue(const KeyValue& kv) {
  const auto v = parseNumbers(kv);
  if (v.empty() || v.size() > 2) parseError(kv.line, kv.key + " expects '<re> [<im>]'");
  return {v[0], v.size() == 2 ? v[1] : 0.0};
}

}  // namespace

Scenario parseScenario(std::string_view text, std::vector<KeyValue>* extra) {
  std::map<std::string, KeyValue> kvs;
  int lineNo = 0;
  while (!text.empty()) {
    ++lineNo;
    const size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (const size_t hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const size_t eq = line.find('=');
    if (eq == std::string_view::npos) parseError(lineNo, "expected 'key = value'");
    KeyValue kv{std::string(trim(line.substr(0, eq))), std::string(trim(line.substr(eq + 1))),
                lineNo};
    if (kv.key.empty()) parseError(lineNo, "empty key");
    if (kv.key.rfind("sweep.", 0) == 0) {
      if (!extra) parseError(lineNo, "sweep keys are only allowed in sweep files");
      extra->push_back(kv);
      continue;
    }
    if (kvs.count(kv.key)) parseError(lineNo, "duplicate key '" + kv.key + "'");
    kvs.emplace(kv.key, kv);
  }

  Scenario s;
  auto take = [&](const char* key) -> const KeyValue* {
    auto it = kvs.find(key);
    return it == kvs.end() ? nullptr : &it->second;
  };
  auto require = [&](const char* key) -> const KeyValue& {
    const KeyValue* kv = take(key);
    if (!kv) throw Error(ErrorCode::Parse, std::string("missing required key '") + key + "'");
    return *kv;
  };

  if (const KeyValue* kv = take("name")) s.name = kv->value;

  const bool phaseForm = take("alpha") || take("beta");
  const bool explicitForm = take("dA") || take("dB") || take("dC");
  if (phaseForm && explicitForm)
    throw Error(ErrorCode::Parse, "give either alpha/beta or dA/dB/dC, not both");
  if (!phaseForm && !explicitForm)
    throw Error(ErrorCode::Parse, "missing initial state (alpha/beta or dA/dB/dC)");
  if (phaseForm) {
    s.initial = InitialState::phases(scalar(require("alpha")),
                                     take("beta") ? scalar(*take("beta")) : 0.0);
  } else {
    AmplitudeVector a;
    if (const KeyValue* kv = take("dA")) a.dA = complexValue(*kv);
    if (const KeyValue* kv = take("dB")) a.dB = complexValue(*kv);
    if (const KeyValue* kv = take("dC")) a.dC = complexValue(*kv);
    s.initial = InitialState::amplitudes(a);
  }

  s.params.gamma0 = scalar(require("gamma0"));
  s.params.kappa = scalar(require("kappa"));
  s.params.delta = take("delta") ? scalar(*take("delta")) : 0.0;
  s.params.theta = take("theta") ? scalar(*take("theta")) : 0.0;

  s.strengths.p = take("p") ? scalar(*take("p")) : 0.0;
  s.strengths.q = take("q") ? scalar(*take("q")) : s.strengths.p;
  s.strengths.pr = take("pr") ? scalar(*take("pr")) : 0.0;
  s.strengths.qr = take("qr") ? scalar(*take("qr")) : s.strengths.pr;

  if (const KeyValue* kv = take("t_max")) s.grid.tMax = scalar(*kv);
  if (const KeyValue* kv = take("num_points")) {
    const double n = scalar(*kv);
    if (n != std::floor(n) || n < 2 || n > 1e8)
      parseError(kv->line, "num_points must be an integer >= 2");
    s.grid.numPoints = static_cast<int>(n);
  }

  static const char* known[] = {"name", "alpha", "beta", "dA", "dB", "dC", "gamma0", "kappa",
                                "delta", "theta", "p", "q", "pr", "qr", "t_max", "num_points"};
  for (const auto& [key, kv] : kvs) {
    bool ok = false;
    for (const char* k : known) ok = ok || key == k;
    if (!ok) parseError(kv.line, "unknown key '" + key + "'");
  }

  s.validate();
  return s;
}

std::string readTextFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Scenario loadScenarioFile(const std::string& path, std::vector<KeyValue>* extra) {
  return parseScenario(readTextFile(path), extra);
}

void writeScenario(std::ostream& os, const Scenario& s) {
  if (!s.name.empty()) os << "name = " << s.name << '\n';
  if (s.initial.usePhases) {
    os << "alpha = " << formatDouble(s.initial.alpha) << '\n';
    os << "beta = " << formatDouble(s.initial.beta) << '\n';
  } else {
    const AmplitudeVector& a = s.initial.explicitAmplitudes;
    os << "dA = " << formatDouble(a.dA.real()) << ' ' << formatDouble(a.dA.imag()) << '\n';
    os << "dB = " << formatDouble(a.dB.real()) << ' ' << formatDouble(a.dB.imag()) << '\n';
    os << "dC = " << formatDouble(a.dC.real()) << ' ' << formatDouble(a.dC.imag()) << '\n';
  }
  os << "gamma0 = " << formatDouble(s.params.gamma0) << '\n'
     << "kappa = " << formatDouble(s.params.kappa) << '\n'
     << "delta = " << formatDouble(s.params.delta) << '\n'
     << "theta = " << formatDouble(s.params.theta) << '\n'
     << "p = " << formatDouble(s.strengths.p) << '\n'
     << "q = " << formatDouble(s.strengths.q) << '\n'
     << "pr = " << formatDouble(s.strengths.pr) << '\n'
     << "qr = " << formatDouble(s.strengths.qr) << '\n'
     << "t_max = " << formatDouble(s.grid.tMax) << '\n'
     << "num_points = " << s.grid.numPoints << '\n';
}

void writeSeriesCsv(std::ostream& os, const CoherenceSeries& series) {
  os << kCsvHeader << '\n';
  for (const SeriesPoint& pt : series) {
    const auto& r = pt.rho;
    const double cols[] = {pt.t,
                           pt.xi,
                           r(0, 0).real(),
                           r(1, 1).real(),
                           r(2, 2).real(),
                           r(0, 1).real(),
                           r(0, 1).imag(),
                           r(0, 2).real(),
                           r(0, 2).imag(),
                           r(1, 2).real(),
                           r(1, 2).imag()};
    bool first = true;
    for (double v : cols) {
      if (!first) os << ',';
      os << formatDouble(v);
      first = false;
    }
    os << '\n';
  }
}

}  // namespace vcoh
