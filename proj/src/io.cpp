#include "hlab/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace hlab {

namespace {

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  return j.at(key);
}

int int_member(const Json& j, const char* key) {
  const Json& v = member(j, key);
  if (!v.is_number_integer()) throw InputError(std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

void require_kind(const Json& j, const char* kind) {
  const Json& k = member(j, "kind");
  if (!k.is_string() || k.get<std::string>() != kind) {
    throw InputError(std::string("expected kind '") + kind + "', got " + k.dump());
  }
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw InputError("rational scalar must be a string \"p/q\" or an integer, got " + j.dump());
}

struct FieldSpec {
  enum class Type { rational, cyclotomic, prime } type = Type::rational;
  int param = 0;
};

FieldSpec field_from_json(const Json& j) {
  const Json& t = member(j, "type");
  if (!t.is_string()) throw InputError("field type must be a string");
  const auto name = t.get<std::string>();
  if (name == "rational") return {};
  if (name == "cyclotomic") {
    const int m = int_member(j, "order");
    if (m < 1) throw InputError("cyclotomic order must be positive");
    return {FieldSpec::Type::cyclotomic, m};
  }
  if (name == "prime") {
    const int p = int_member(j, "p");
    if (!is_prime(p)) throw InputError("prime field needs a prime p, got " + std::to_string(p));
    return {FieldSpec::Type::prime, p};
  }
  throw InputError("unknown field type '" + name + "'");
}

Json field_to_json(const AnyMatrix& m) {
  if (const auto* c = std::get_if<Mat<Cyclotomic>>(&m)) {
    int order = 0;
    for (Index i = 0; i < c->size() && order == 0; ++i) order = c->data()[i].order();
    return Json{{"type", "cyclotomic"}, {"order", order}};
  }
  if (const auto* p = std::get_if<Mat<PrimeResidue>>(&m)) {
    std::int64_t prime = 0;
    for (Index i = 0; i < p->size() && prime == 0; ++i) prime = p->data()[i].prime();
    return Json{{"type", "prime"}, {"p", prime}};
  }
  return Json{{"type", "rational"}};
}

Json scalar_to_json(const Rational& x) { return x.str(); }
Json scalar_to_json(const Cyclotomic& x) {
  Json out = Json::array();
  for (const auto& c : x.coefficients()) out.push_back(c.str());
  return out;
}
Json scalar_to_json(const PrimeResidue& x) { return x.value(); }

// Reads a list of vectors as the columns of a matrix over the declared field.
AnyMatrix columns_from_json(const FieldSpec& field, const Json& cols, int expected_rows) {
  if (!cols.is_array()) throw InputError("vector list must be an array");
  const Index n = static_cast<Index>(cols.size());
  for (const auto& c : cols) {
    if (!c.is_array()) throw InputError("each vector must be an array");
    if (expected_rows >= 0 && static_cast<int>(c.size()) != expected_rows) {
      throw InputError("vector " + c.dump() + " has length " + std::to_string(c.size()) + ", expected " +
                       std::to_string(expected_rows));
    }
  }
  const Index rows = expected_rows >= 0 ? expected_rows : (n == 0 ? 0 : static_cast<Index>(cols[0].size()));
  for (const auto& c : cols) {
    if (static_cast<Index>(c.size()) != rows) throw InputError("vectors of unequal length");
  }
  switch (field.type) {
    case FieldSpec::Type::rational: {
      MatQ m(rows, n);
      for (Index j = 0; j < n; ++j) {
        for (Index i = 0; i < rows; ++i) m(i, j) = rational_from_json(cols[j][i]);
      }
      return m;
    }
    case FieldSpec::Type::cyclotomic: {
      auto f = CyclotomicField::get(field.param);
      Mat<Cyclotomic> m(rows, n);
      for (Index j = 0; j < n; ++j) {
        for (Index i = 0; i < rows; ++i) {
          const Json& e = cols[j][i];
          std::vector<Rational> coeffs;
          if (e.is_array()) {
            for (const auto& c : e) coeffs.push_back(rational_from_json(c));
          } else {
            coeffs.push_back(rational_from_json(e));
          }
          m(i, j) = Cyclotomic(f, std::move(coeffs));
        }
      }
      return m;
    }
    case FieldSpec::Type::prime: {
      Mat<PrimeResidue> m(rows, n);
      for (Index j = 0; j < n; ++j) {
        for (Index i = 0; i < rows; ++i) {
          const Json& e = cols[j][i];
          if (!e.is_number_integer()) throw InputError("prime-field scalars must be integers, got " + e.dump());
          m(i, j) = PrimeResidue(e.get<std::int64_t>(), field.param);
        }
      }
      return m;
    }
  }
  throw InputError("unreachable field type");
}

Json columns_to_json(const AnyMatrix& any) {
  return std::visit(
      [](const auto& m) {
        Json cols = Json::array();
        for (Index j = 0; j < m.cols(); ++j) {
          Json col = Json::array();
          for (Index i = 0; i < m.rows(); ++i) col.push_back(scalar_to_json(m(i, j)));
          cols.push_back(std::move(col));
        }
        return cols;
      },
      any);
}

std::vector<ElementSet> subsets_from_json(const Json& j, int ground) {
  if (!j.is_array()) throw InputError("subset list must be an array");
  std::vector<ElementSet> out;
  for (const auto& s : j) {
    if (!s.is_array()) throw InputError("subset must be an array of element indices");
    ElementSet set = 0;
    for (const auto& e : s) {
      if (!e.is_number_integer()) throw InputError("element index must be an integer, got " + e.dump());
      const int v = e.get<int>();
      if (v < 0 || v >= ground) throw InputError("element " + std::to_string(v) + " outside the ground set");
      if (contains(set, v)) throw InputError("repeated element " + std::to_string(v) + " in subset");
      set |= singleton(v);
    }
    out.push_back(set);
  }
  return out;
}

}  // namespace

Json read_json_file(const std::string& path) {
  const std::string text = read_text_file(path);
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError("malformed JSON in " + path + ": " + e.what());
  }
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write file '" + path + "'");
  out << text;
}

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Source source_from_json(const Json& j) {
  const Json& kind = member(j, "kind");
  if (kind == "arrangement") {
    const FieldSpec field = field_from_json(member(j, "field"));
    const int n = int_member(j, "dimension");
    if (n < 1) throw InputError("projective dimension must be at least 1");
    return build_arrangement(n, columns_from_json(field, member(j, "hyperplanes"), n + 1));
  }
  if (kind == "matroid") {
    const int ground = int_member(j, "ground");
    const bool require_simple = !(j.contains("allow_non_simple") && j.at("allow_non_simple") == true);
    if (ground < 0 || ground > kMaxGround) throw InputError("ground size out of range");
    int given = 0;
    for (const char* k : {"bases", "nonbases", "representation"}) given += j.contains(k) ? 1 : 0;
    if (given != 1) throw InputError("matroid needs exactly one of 'bases', 'nonbases', 'representation'");
    std::optional<Matroid> m;
    if (j.contains("bases")) {
      m = Matroid::from_bases(ground, subsets_from_json(j.at("bases"), ground), require_simple);
    } else if (j.contains("nonbases")) {
      m = Matroid::from_nonbases(ground, int_member(j, "rank"), subsets_from_json(j.at("nonbases"), ground),
                                 require_simple);
    } else {
      const Json& rep = j.at("representation");
      const FieldSpec field = field_from_json(member(rep, "field"));
      AnyMatrix cols = columns_from_json(field, member(rep, "columns"), -1);
      if (any_cols(cols) != ground) throw InputError("representation has a column count different from 'ground'");
      m = Matroid::from_representation(std::move(cols), require_simple);
    }
    if (j.contains("rank") && int_member(j, "rank") != m->rank()) {
      throw InputError("declared rank " + std::to_string(int_member(j, "rank")) + " but the data has rank " +
                       std::to_string(m->rank()));
    }
    return *m;
  }
  throw InputError("unknown source kind " + kind.dump());
}

Json source_to_json(const Source& s) {
  if (s.is_arrangement()) {
    const Arrangement& a = s.arrangement();
    return Json{{"kind", "arrangement"},
                {"field", field_to_json(a.normals())},
                {"dimension", a.dimension()},
                {"hyperplanes", columns_to_json(a.normals())}};
  }
  const Matroid& m = s.matroid();
  Json j{{"kind", "matroid"}, {"ground", m.ground()}, {"rank", m.rank()}};
  if (m.representation()) {
    j["representation"] = Json{{"field", field_to_json(*m.representation())},
                               {"columns", columns_to_json(*m.representation())}};
  } else {
    Json bases = Json::array();
    for (ElementSet b : m.bases()) bases.push_back(elements_of(b));
    j["bases"] = std::move(bases);
  }
  return j;
}

VecQ weights_from_json(const Json& j) {
  require_kind(j, "weights");
  const Json& values = member(j, "values");
  if (!values.is_array()) throw InputError("weights 'values' must be an array");
  VecQ a(static_cast<Index>(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i) a(static_cast<Index>(i)) = rational_from_json(values[i]);
  return a;
}

Json weights_to_json(const VecQ& a) { return Json{{"kind", "weights"}, {"values", to_json(a)}}; }

MatQ symmetric_matrix_from_json(const Json& j) {
  require_kind(j, "symmetric_matrix");
  const Json& rows = member(j, "entries");
  if (!rows.is_array()) throw InputError("'entries' must be an array of rows");
  const Index n = static_cast<Index>(rows.size());
  MatQ m(n, n);
  for (Index i = 0; i < n; ++i) {
    if (!rows[i].is_array() || static_cast<Index>(rows[i].size()) != n) throw InputError("matrix must be square");
    for (Index k = 0; k < n; ++k) m(i, k) = rational_from_json(rows[i][k]);
  }
  if (!is_symmetric(m)) throw InputError("matrix is not symmetric");
  return m;
}

Json symmetric_matrix_to_json(const MatQ& m) { return Json{{"kind", "symmetric_matrix"}, {"entries", to_json(m)}}; }

Json to_json(const Rational& r) { return r.str(); }

Json to_json(const VecQ& v) {
  Json out = Json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(v(i).str());
  return out;
}

Json to_json(const MatQ& m) {
  Json out = Json::array();
  for (Index i = 0; i < m.rows(); ++i) out.push_back(to_json(VecQ(m.row(i).transpose())));
  return out;
}

Json to_json(ElementSet s) { return elements_of(s); }

Json to_json(const Flat& f) {
  return Json{{"elements", elements_of(f.elements)}, {"rank", f.rank}, {"size", f.size()}};
}

Json to_json(const Inertia& i) {
  return Json{{"n_pos", i.positive}, {"n_neg", i.negative}, {"n_zero", i.zero}};
}

Json to_json(const FlatSlack& f) {
  return Json{{"flat", elements_of(f.flat.elements)}, {"rank", f.flat.rank}, {"sum", f.sum.str()},
              {"slack", f.slack.str()}};
}

Json to_json(const StabilityReport& r) {
  Json violations = Json::array();
  for (const auto& v : r.violations) violations.push_back(to_json(v));
  return Json{{"klt", r.klt},
              {"cy", r.cy},
              {"log_canonical", r.log_canonical},
              {"stable", r.stable},
              {"semistable", r.semistable},
              {"s", r.s.str()},
              {"lambda", r.lambda ? Json(r.lambda->str()) : Json(nullptr)},
              {"violations", violations},
              {"nonpositive", r.nonpositive}};
}

Json to_json(const HirzebruchVerdict& v) {
  Json h1 = Json::array();
  for (const auto& f : v.h1_violations) h1.push_back(to_json(f));
  return Json{{"verdict", verdict_name(v.kind)},
              {"h1_violations", h1},
              {"h2_violations", v.h2_violations},
              {"sum_multiplicities", v.sum_multiplicities},
              {"bound", v.bound.str()},
              {"inequality_holds", v.inequality_holds},
              {"equality", v.equality}};
}

Json to_json(const SimplexMinimum& m) {
  return Json{{"value", m.value.str()}, {"point", to_json(m.point)}, {"support", elements_of(m.support)}};
}

}  // namespace hlab
