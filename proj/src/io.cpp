#include "dnsurf/io.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace dnsurf::io {

namespace {

using nlohmann::json;

std::string u64_hex(uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, v >>= 4) out[static_cast<size_t>(i)] = digits[v & 15];
  return out;
}

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

std::vector<FaceId> id_list(const json& j, const char* what) {
  if (!j.is_array()) fail(ErrorCode::FormatError, std::string(what) + " must be an array");
  std::vector<FaceId> out;
  for (const auto& x : j) {
    if (!x.is_number_integer()) fail(ErrorCode::FormatError, std::string(what) + " entries must be integers");
    out.push_back(x.get<FaceId>());
  }
  return out;
}

}  // namespace

std::string write_poset(const FacePoset& p) { return detail::poset_json_text(p, true); }

void write_poset(std::ostream& out, const FacePoset& p) { out << write_poset(p); }

FacePoset read_poset(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    fail(ErrorCode::FormatError, e.what());
  }
  if (!doc.is_object()) fail(ErrorCode::FormatError, "top level must be an object");
  for (const auto& [key, value] : doc.items()) {
    (void)value;
    if (key != "format" && key != "dimension" && key != "faces" && key != "gluing_spec")
      fail(ErrorCode::FormatError, "unknown key: " + key);
  }
  if (!doc.contains("format") || doc["format"] != "dnsurf-poset/1")
    fail(ErrorCode::FormatError, "missing or unsupported format tag");
  if (!doc.contains("dimension") || !doc["dimension"].is_number_integer())
    fail(ErrorCode::FormatError, "missing dimension");
  const int dim = doc["dimension"].get<int>();
  if (dim < 0 || dim > 16) fail(ErrorCode::FormatError, "dimension out of range");
  if (!doc.contains("faces") || !doc["faces"].is_array()) fail(ErrorCode::FormatError, "missing faces");
  const auto& jlv = doc["faces"];
  if (jlv.size() != static_cast<size_t>(dim) + 1) fail(ErrorCode::FormatError, "faces must list one level per dimension");

  std::vector<std::vector<Face>> levels;
  for (const auto& lv : jlv) {
    if (!lv.is_array()) fail(ErrorCode::FormatError, "level must be an array");
    std::vector<Face> faces;
    for (const auto& rec : lv) {
      if (!rec.is_object() || !rec.contains("b") || !rec.contains("v") || rec.size() != 2)
        fail(ErrorCode::FormatError, "face record must have exactly keys b and v");
      faces.push_back(Face{id_list(rec["b"], "b"), id_list(rec["v"], "v")});
    }
    levels.push_back(std::move(faces));
  }

  std::optional<GluingSpec> echo;
  if (doc.contains("gluing_spec")) {
    const auto& js = doc["gluing_spec"];
    if (!js.is_object() || !js.contains("n_facets") || !js.contains("gluings") || js.size() != 2)
      fail(ErrorCode::FormatError, "gluing_spec must have exactly keys n_facets and gluings");
    GluingSpec spec;
    if (!js["n_facets"].is_number_integer()) fail(ErrorCode::FormatError, "n_facets must be an integer");
    spec.n_facets = js["n_facets"].get<int>();
    if (!js["gluings"].is_array()) fail(ErrorCode::FormatError, "gluings must be an array");
    for (const auto& row : js["gluings"]) {
      if (!row.is_array() || row.size() != 4) fail(ErrorCode::FormatError, "gluing row must have four slots");
      std::array<std::optional<FaceGluing>, 4> out_row;
      for (size_t i = 0; i < 4; ++i) {
        const auto& slot = row[i];
        if (slot.is_null()) continue;
        if (!slot.is_object() || !slot.contains("t") || !slot.contains("f") || !slot.contains("p") || slot.size() != 3)
          fail(ErrorCode::FormatError, "gluing slot must have exactly keys t, f, p");
        FaceGluing g;
        if (!slot["t"].is_number_integer() || !slot["f"].is_number_integer())
          fail(ErrorCode::FormatError, "gluing target must be integers");
        g.target = slot["t"].get<int>();
        g.target_face = slot["f"].get<int>();
        const auto perm = id_list(slot["p"], "p");
        if (perm.size() != 4) fail(ErrorCode::FormatError, "gluing permutation must have four entries");
        for (size_t k = 0; k < 4; ++k) {
          if (perm[k] < 0 || perm[k] > 3) fail(ErrorCode::FormatError, "gluing permutation entry out of range");
          g.perm[k] = static_cast<uint8_t>(perm[k]);
        }
        out_row[i] = g;
      }
      spec.gluings.push_back(out_row);
    }
    echo = std::move(spec);
  }
  return FacePoset::from_parts(dim, std::move(levels), std::move(echo));
}

FacePoset read_poset(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return read_poset(buf.str());
}

std::string hash_hex(const FacePoset& p) { return u64_hex(p.hash()); }

std::string write_cochain(const Cochain& c) {
  const int n = c.size();
  std::string bits;
  bits.reserve(static_cast<size_t>((n + 3) / 4));
  static const char* digits = "0123456789abcdef";
  for (int j = 0; j * 4 < n; ++j) {
    int v = 0;
    for (int b = 0; b < 4 && j * 4 + b < n; ++b)
      if (c.get(j * 4 + b)) v |= 1 << b;
    bits.push_back(digits[v]);
  }
  std::ostringstream out;
  out << "dnsurf-cochain/1 dim=" << c.dim() << " complex=" << u64_hex(c.complex_hash()) << " n=" << n
      << " bits=" << bits;
  return out.str();
}

Cochain read_cochain(const FacePoset& p, int dim, const std::string& text) {
  if (dim < 0 || dim > p.dimension()) fail(ErrorCode::InvalidComplexData, "cochain dimension out of range");
  const int n = static_cast<int>(p.size(dim));
  const int want_digits = (n + 3) / 4;

  std::string trimmed;
  {
    size_t a = text.find_first_not_of(" \t\r\n");
    size_t b = text.find_last_not_of(" \t\r\n");
    if (a == std::string::npos) fail(ErrorCode::FormatError, "empty cochain text");
    trimmed = text.substr(a, b - a + 1);
  }

  std::string bits;
  if (trimmed.rfind("dnsurf-cochain/1", 0) == 0) {
    std::istringstream in(trimmed);
    std::string tag, field;
    in >> tag;
    int got_dim = -1;
    long long got_n = -1;
    std::string got_hash;
    bool have_bits = false;
    while (in >> field) {
      const auto eq = field.find('=');
      if (eq == std::string::npos) fail(ErrorCode::FormatError, "malformed cochain field: " + field);
      const std::string key = field.substr(0, eq);
      const std::string value = field.substr(eq + 1);
      try {
        if (key == "dim")
          got_dim = std::stoi(value);
        else if (key == "complex")
          got_hash = value;
        else if (key == "n")
          got_n = std::stoll(value);
        else if (key == "bits") {
          bits = value;
          have_bits = true;
        } else
          fail(ErrorCode::FormatError, "unknown cochain field: " + key);
      } catch (const std::logic_error&) {
        fail(ErrorCode::FormatError, "malformed cochain field: " + field);
      }
    }
    if (got_dim < 0 || got_n < 0 || got_hash.empty() || !have_bits)
      fail(ErrorCode::FormatError, "cochain header is missing fields");
    if (got_hash != u64_hex(p.hash()))
      fail(ErrorCode::ComplexMismatch, "cochain was written for complex " + got_hash);
    if (got_dim != dim) fail(ErrorCode::ComplexMismatch, "cochain has dimension " + std::to_string(got_dim));
    if (got_n != n) fail(ErrorCode::ComplexMismatch, "cochain length does not match the complex");
  } else {
    bits = trimmed;
  }

  if (static_cast<int>(bits.size()) != want_digits)
    fail(ErrorCode::FormatError, "expected " + std::to_string(want_digits) + " hex digits, got " +
                                     std::to_string(bits.size()));
  Cochain c(p, dim);
  for (int j = 0; j < want_digits; ++j) {
    const int v = hex_value(bits[static_cast<size_t>(j)]);
    if (v < 0) fail(ErrorCode::FormatError, "bad hex digit in cochain bits");
    for (int b = 0; b < 4; ++b) {
      if (j * 4 + b >= n) {
        if (v & (1 << b)) fail(ErrorCode::FormatError, "cochain bits extend past the face count");
        continue;
      }
      if (v & (1 << b)) c.set(j * 4 + b, true);
    }
  }
  return c;
}

}  // namespace dnsurf::io
