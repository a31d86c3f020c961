#include "cli/state_file.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "conclab/error.hpp"

namespace conclab::cli {

namespace {

using nlohmann::json;

[[noreturn]] void schema_error(const std::string& what) {
  throw Error(ErrorCode::kSchemaError, what);
}

std::string full_precision(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v == 0.0 ? 0.0 : v);
  return buf;
}

int read_dim(const json& dims, std::size_t i) {
  const json& d = dims[i];
  if (!d.is_number_integer() || d.get<long long>() < 1) {
    schema_error("field 'dims[" + std::to_string(i) +
                 "]' must be a positive integer");
  }
  return static_cast<int>(d.get<long long>());
}

std::vector<Complex> read_data(const json& data, std::size_t expected) {
  if (!data.is_array()) schema_error("field 'data' must be an array");
  if (data.size() != expected) {
    schema_error("field 'data' has " + std::to_string(data.size()) +
                 " entries, dims require " + std::to_string(expected));
  }
  std::vector<Complex> out;
  out.reserve(expected);
  for (std::size_t i = 0; i < data.size(); ++i) {
    const json& e = data[i];
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() ||
        !e[1].is_number()) {
      schema_error("field 'data[" + std::to_string(i) +
                   "]' must be a [re, im] pair of numbers");
    }
    out.emplace_back(e[0].get<double>(), e[1].get<double>());
  }
  return out;
}

}  // namespace

State parse_state_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    schema_error(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) schema_error("top level must be an object");
  for (const char* key : {"kind", "dims", "data"}) {
    if (!doc.contains(key)) schema_error(std::string("missing field '") + key + "'");
  }
  const json& kind = doc["kind"];
  if (!kind.is_string() ||
      (kind.get<std::string>() != "pure" && kind.get<std::string>() != "density")) {
    schema_error("field 'kind' must be \"pure\" or \"density\"");
  }
  const json& dims_j = doc["dims"];
  if (!dims_j.is_array() || dims_j.size() != 2) {
    schema_error("field 'dims' must be [dA, dB]");
  }
  const Dims dims(read_dim(dims_j, 0), read_dim(dims_j, 1));

  if (kind.get<std::string>() == "pure") {
    const auto data = read_data(doc["data"], static_cast<std::size_t>(dims.total()));
    CMatrix c(dims.alice(), dims.bob());
    for (int i = 0; i < dims.alice(); ++i) {
      for (int j = 0; j < dims.bob(); ++j) c(i, j) = data[i * dims.bob() + j];
    }
    return PureState(dims, std::move(c));
  }
  const int n = dims.total();
  const auto data = read_data(doc["data"], static_cast<std::size_t>(n) * n);
  CMatrix rho(n, n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) rho(r, c) = data[r * n + c];
  }
  return DensityMatrix(dims, std::move(rho));
}

State parse_state_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) schema_error("cannot open state file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_state_json(buf.str());
}

std::string format_state_json(const State& state) {
  std::ostringstream os;
  auto emit = [&os](const char* kind, const Dims& dims, const auto& entries) {
    os << "{\n  \"kind\": \"" << kind << "\",\n  \"dims\": [" << dims.alice()
       << ", " << dims.bob() << "],\n  \"data\": [";
    for (std::size_t i = 0; i < entries.size(); ++i) {
      os << (i ? ",\n    [" : "\n    [") << full_precision(entries[i].real())
         << ", " << full_precision(entries[i].imag()) << "]";
    }
    os << "\n  ]\n}\n";
  };
  if (const auto* p = std::get_if<PureState>(&state)) {
    std::vector<Complex> flat;
    for (int i = 0; i < p->dims().alice(); ++i) {
      for (int j = 0; j < p->dims().bob(); ++j) flat.push_back(p->coeffs()(i, j));
    }
    emit("pure", p->dims(), flat);
  } else {
    const auto& rho = std::get<DensityMatrix>(state);
    std::vector<Complex> flat;
    const auto n = rho.matrix().rows();
    for (Eigen::Index r = 0; r < n; ++r) {
      for (Eigen::Index c = 0; c < n; ++c) flat.push_back(rho.matrix()(r, c));
    }
    emit("density", rho.dims(), flat);
  }
  return os.str();
}

void write_state_file(const std::filesystem::path& path, const State& state) {
  std::ofstream out(path);
  if (!out) {
    throw Error(ErrorCode::kSchemaError,
                "cannot write state file '" + path.string() + "'");
  }
  out << format_state_json(state);
}

}  // namespace conclab::cli
