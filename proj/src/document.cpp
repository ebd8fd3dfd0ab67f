#include "stardmp/cli/document.hpp"

namespace stardmp::io {

namespace {

const json& require(const json& j, const char* key, const std::string& path) {
  if (!j.is_object()) throw DocumentError(path, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) throw DocumentError(path + "/" + key, "missing field");
  return *it;
}

int require_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) throw DocumentError(path, "expected an integer");
  const auto v = j.get<std::int64_t>();
  if (v < 1 || v > 1'000'000) throw DocumentError(path, "out of range");
  return static_cast<int>(v);
}

std::int64_t entry_int(const json& j, const std::string& path) {
  if (j.is_number_integer()) return j.get<std::int64_t>();
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    std::size_t used = 0;
    try {
      const auto v = std::stoll(s, &used);
      if (used == s.size()) return v;
    } catch (const std::exception&) {
    }
  }
  throw DocumentError(path, "expected an integer");
}

// Square array of arrays of dimension n.
void require_square(const json& v, std::size_t n, const std::string& path) {
  if (!v.is_array() || v.size() != n) throw DocumentError(path, "expected " + std::to_string(n) + " rows");
  for (std::size_t i = 0; i < n; ++i)
    if (!v[i].is_array() || v[i].size() != n)
      throw DocumentError(path + "/" + std::to_string(i), "expected " + std::to_string(n) + " entries");
}

}  // namespace

json descriptor_to_json(const StarRingDescriptor& d) {
  json j;
  switch (d.kind) {
    case StarRingDescriptor::Kind::gaussian_rational_matrix:
      j["kind"] = "gaussian-rational-matrix";
      j["n"] = d.n;
      j["involution"] = std::string(to_string(d.involution));
      break;
    case StarRingDescriptor::Kind::zn:
      j["kind"] = "zn";
      j["n"] = d.n;
      break;
    case StarRingDescriptor::Kind::zp_matrix:
      j["kind"] = "zp-matrix";
      j["p"] = d.p;
      j["k"] = d.n;
      j["involution"] = std::string(to_string(d.involution));
      break;
  }
  return j;
}

StarRingDescriptor descriptor_from_json(const json& j, const std::string& path) {
  const json& kind = require(j, "kind", path);
  if (!kind.is_string()) throw DocumentError(path + "/kind", "expected a string");
  const auto& k = kind.get_ref<const std::string&>();
  auto involution = [&](Involution fallback) {
    const auto it = j.find("involution");
    if (it == j.end()) return fallback;
    if (!it->is_string()) throw DocumentError(path + "/involution", "expected a string");
    try {
      return parse_involution(it->get_ref<const std::string&>());
    } catch (const DomainError& e) {
      throw DocumentError(path + "/involution", e.what());
    }
  };
  try {
    if (k == "gaussian-rational-matrix")
      return StarRingDescriptor::gaussian_matrix(require_int(require(j, "n", path), path + "/n"),
                                                 involution(Involution::conjugate_transpose));
    if (k == "zn") return StarRingDescriptor::zn(require_int(require(j, "n", path), path + "/n"));
    if (k == "zp-matrix")
      return StarRingDescriptor::zp_matrix(require_int(require(j, "p", path), path + "/p"),
                                           require_int(require(j, "k", path), path + "/k"),
                                           involution(Involution::transpose));
  } catch (const DocumentError&) {
    throw;
  } catch (const DomainError& e) {
    throw DocumentError(path, e.what());
  }
  throw DocumentError(path + "/kind", "unknown ring kind '" + k + "'");
}

json value_to_json(const exact::ExactMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

json value_to_json(const finite::ZnElement& e) { return e.value(); }

json value_to_json(const finite::FiniteMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).value());
    rows.push_back(std::move(row));
  }
  return rows;
}

Document parse_document(const json& j) {
  if (!j.is_object()) throw DocumentError("/", "expected an object with 'ring' and 'value'");
  const StarRingDescriptor d = descriptor_from_json(require(j, "ring", ""), "/ring");
  const json& v = require(j, "value", "");
  switch (d.kind) {
    case StarRingDescriptor::Kind::gaussian_rational_matrix: {
      const auto n = static_cast<std::size_t>(d.n);
      require_square(v, n, "/value");
      std::vector<std::vector<exact::GaussianRational>> rows(n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t c = 0; c < n; ++c) {
          const std::string path = "/value/" + std::to_string(i) + "/" + std::to_string(c);
          const json& e = v[i][c];
          if (!e.is_string()) throw DocumentError(path, "entries must be strings such as \"1/2-3/4 i\"");
          try {
            rows[i].push_back(exact::GaussianRational::parse(e.get_ref<const std::string&>()));
          } catch (const DomainError& err) {
            throw DocumentError(path, err.what());
          }
        }
      return {d, exact::ExactMatrixRing(n, d.involution).make(rows)};
    }
    case StarRingDescriptor::Kind::zn:
      return {d, finite::ZnElement(entry_int(v, "/value"), static_cast<std::uint32_t>(d.n))};
    case StarRingDescriptor::Kind::zp_matrix: {
      const auto k = static_cast<std::size_t>(d.n);
      require_square(v, k, "/value");
      std::vector<std::vector<std::int64_t>> rows(k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t c = 0; c < k; ++c)
          rows[i].push_back(entry_int(v[i][c], "/value/" + std::to_string(i) + "/" + std::to_string(c)));
      return {d, finite::ZpMatrixRing(static_cast<std::uint32_t>(d.p), k, 1).make(rows)};
    }
  }
  throw DocumentError("/ring/kind", "unknown ring kind");
}

Document parse_document_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw DocumentError("/", std::string("invalid JSON: ") + e.what());
  }
  return parse_document(j);
}

json document_to_json(const Document& doc) {
  return std::visit([&](const auto& e) { return element_to_json(doc.ring, e); }, doc.value);
}

}  // namespace stardmp::io
