#include "torelli/json_io.hpp"

#include "torelli/error.hpp"

namespace torelli::json {

namespace {

void expect(bool ok, const std::string& what) {
  require(ok, ErrorKind::usage, "malformed JSON: " + what);
}

}  // namespace

Json encode(const Integer& x) {
  if (auto small = to_int64(x)) return *small;
  return x.str();
}

Integer decode_integer(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    const std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    expect(s.size() > start &&
               s.find_first_not_of("0123456789", start) == std::string::npos,
           "integer string '" + s + "'");
    return Integer(s);
  }
  expect(false, "expected an integer");
  return 0;
}

Json encode(const HVector& x) {
  Json out = Json::array();
  for (const auto& c : x.coords()) out.push_back(encode(c));
  return out;
}

HVector decode_vector(const Json& j) {
  expect(j.is_array(), "vector must be an array");
  std::vector<Integer> coords;
  for (const auto& c : j) coords.push_back(decode_integer(c));
  return HVector(std::move(coords));
}

Json encode(const IntMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(encode(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

IntMatrix decode_matrix(const Json& j) {
  expect(j.is_array(), "matrix must be an array of rows");
  std::vector<std::vector<Integer>> rows;
  for (const auto& r : j) {
    expect(r.is_array(), "matrix rows must be arrays");
    std::vector<Integer> row;
    for (const auto& c : r) row.push_back(decode_integer(c));
    rows.push_back(std::move(row));
  }
  return IntMatrix::from_rows(rows);
}

Json encode(const Sl2Matrix& m) {
  return Json::array({Json::array({encode(m(0, 0)), encode(m(0, 1))}),
                      Json::array({encode(m(1, 0)), encode(m(1, 1))})});
}

Sl2Matrix decode_sl2(const Json& j) {
  const IntMatrix m = decode_matrix(j);
  expect(m.rows() == 2 && m.cols() == 2, "expected a 2x2 matrix");
  return {m(0, 0), m(0, 1), m(1, 0), m(1, 1)};
}

Json encode(const GeneratorWord& w) {
  Json out = Json::array();
  for (const auto& l : w.letters())
    out.push_back(Json{{"generator", l.generator == Generator::R1 ? "R1" : "R2"},
                       {"exponent", encode(l.exponent)}});
  return out;
}

Json encode(const SpQuadraticForm& form) {
  Json values = Json::array();
  for (auto v : form.basis_values()) values.push_back(static_cast<int>(v));
  return Json{{"genus", form.genus()}, {"basis_values", std::move(values)}};
}

SpQuadraticForm decode_form(const Json& j) {
  expect(j.is_object() && j.contains("basis_values"), "form needs basis_values");
  std::vector<std::uint8_t> values;
  for (const auto& v : j.at("basis_values")) {
    expect(v.is_number_integer() && (v.get<int>() == 0 || v.get<int>() == 1),
           "basis values must be 0 or 1");
    values.push_back(static_cast<std::uint8_t>(v.get<int>()));
  }
  SpQuadraticForm form(std::move(values));
  if (j.contains("genus"))
    expect(j.at("genus").is_number_integer() && j.at("genus").get<std::size_t>() == form.genus(),
           "genus does not match basis_values");
  return form;
}

namespace {

Json encode_summand(const SummandBasis& p) { return Json::array({encode(p.u), encode(p.v)}); }

SummandBasis decode_summand(const Json& j) {
  expect(j.is_array() && j.size() == 2, "summand must be two basis rows");
  return {decode_vector(j[0]), decode_vector(j[1])};
}

}  // namespace

Json encode(const OrthogonalSplitting& s) {
  return Json{{"V1", encode_summand(s[0])}, {"V2", encode_summand(s[1])}, {"V3", encode_summand(s[2])}};
}

OrthogonalSplitting decode_splitting(const Json& j) {
  expect(j.is_object() && j.contains("V1") && j.contains("V2") && j.contains("V3"),
         "splitting needs V1, V2, V3");
  return {decode_summand(j.at("V1")), decode_summand(j.at("V2")), decode_summand(j.at("V3"))};
}

std::vector<OrthogonalSplitting> decode_family(const Json& j) {
  const Json& list = (j.is_object() && j.contains("splittings")) ? j.at("splittings")
                     : (j.is_object() && j.contains("cycles"))   ? j.at("cycles")
                                                                 : j;
  if (list.is_object()) return {decode_splitting(list)};
  expect(list.is_array(), "expected a list of splittings");
  std::vector<OrthogonalSplitting> out;
  for (const auto& s : list) out.push_back(decode_splitting(s));
  return out;
}

Json encode(const GenericClass& c) {
  Json decs = Json::array();
  for (const auto& d : c.decompositions) {
    Json comps = Json::array(), mults = Json::array(), prims = Json::array();
    for (std::size_t k = 0; k < 3; ++k) {
      comps.push_back(encode(d.components[k]));
      mults.push_back(encode(d.multiplicities[k]));
      prims.push_back(encode(d.primitive_parts[k]));
    }
    decs.push_back(Json{{"components", comps}, {"multiplicities", mults}, {"primitive_parts", prims}});
  }
  return Json{{"x", encode(c.x)}, {"decompositions", decs}};
}

Json encode(const torus::LatticeLine& line) {
  const auto cls = line.realized_class();
  // c as a reduced fraction string: 0, 1/2, 1, 3/2
  static constexpr const char* kC[] = {"0", "1/2", "1", "3/2"};
  return Json{{"a", line.a()},
              {"b", line.b()},
              {"c", kC[line.twice_c()]},
              {"twice_c", line.twice_c()},
              {"class", Json::array({cls.m, cls.n})}};
}

Json encode(const IndependenceCertificate& cert) {
  Json cycles = Json::array();
  for (const auto& c : cert.cycles) cycles.push_back(encode(c.splitting()));
  Json functionals = Json::array();
  for (const auto& m : cert.functionals) functionals.push_back(encode(m));
  return Json{{"cycles", cycles},
              {"functionals", functionals},
              {"value_matrix", encode(cert.value_matrix)},
              {"rank", cert.rank}};
}

IndependenceCertificate decode_certificate(const Json& j) {
  expect(j.is_object(), "certificate must be an object");
  for (const char* key : {"cycles", "functionals", "value_matrix", "rank"})
    expect(j.contains(key), std::string("certificate missing '") + key + "'");
  IndependenceCertificate cert;
  for (const auto& s : j.at("cycles")) cert.cycles.emplace_back(decode_splitting(s));
  for (const auto& m : j.at("functionals")) cert.functionals.push_back(decode_matrix(m));
  cert.value_matrix = decode_matrix(j.at("value_matrix"));
  if (cert.value_matrix.rows() == 0) cert.value_matrix = IntMatrix(0, cert.cycles.size());
  expect(j.at("rank").is_number_unsigned() || j.at("rank").is_number_integer(), "rank");
  cert.rank = j.at("rank").get<std::size_t>();
  return cert;
}

}  // namespace torelli::json
