#pragma once

#include "horokit/bigint.hpp"
#include "horokit/classifier.hpp"
#include "horokit/diophantine.hpp"
#include "horokit/hurwitz.hpp"
#include "horokit/torus.hpp"
#include "horokit/verify.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace horokit {

// All big integers are serialized as decimal strings so consumers never face
// 64-bit truncation.
inline std::string dec(const Int& v) { return v.str(); }

inline const char* kind_name(CobordismKind k) {
  switch (k) {
    case CobordismKind::Product: return "PRODUCT";
    case CobordismKind::BallComplement: return "BALL_COMPLEMENT";
    case CobordismKind::Cp2Complement: return "CP2_COMPLEMENT";
    case CobordismKind::NonzeroB1: return "NONZERO_B1";
  }
  return "UNKNOWN";
}

inline const char* family_name(BallFamily f) { return f == BallFamily::B ? "B" : "BPRIME"; }

inline const char* dir_name(MoveStep::Dir d) { return d == MoveStep::Dir::Up ? "up" : "down"; }

inline const char* mutation_name(Mutation m) { return m == Mutation::X ? "X" : "Y"; }

inline std::string curve_text(const Curve& c) { return "(" + dec(c.p) + "," + dec(c.q) + ")"; }

inline std::string ball_text(const RationalBall& b) {
  if (b.is_b4()) return "B^4";
  return std::string(b.orientation == 1 ? "+" : "-") + "B_{" + dec(b.p) + "," + dec(b.q) + "}";
}

inline std::string lens_text(const LensSpace& l) { return "L(" + dec(l.a) + "," + dec(l.b) + ")"; }

inline nlohmann::json json_of(const Curve& c) { return {{"p", dec(c.p)}, {"q", dec(c.q)}}; }

inline nlohmann::json json_of(const Twist& t) {
  return {{"curve", json_of(t.curve)}, {"sign", t.sign}};
}

inline nlohmann::json json_of(const Solution& s) { return {{"x", dec(s.x)}, {"y", dec(s.y)}}; }

inline nlohmann::json json_of(const SolParams& P) {
  return {{"n", dec(P.n)}, {"eps", P.eps}, {"delta1", P.d1}, {"delta2", P.d2}};
}

inline nlohmann::json json_of(const Factorization& f) {
  nlohmann::json arr = nlohmann::json::array();
  for (const Twist& t : f.twists) arr.push_back(json_of(t));
  return arr;
}

inline nlohmann::json json_of(const MoveStep& m) {
  return {{"dir", dir_name(m.dir)}, {"level", m.level}};
}

inline nlohmann::json json_of(const RationalBall& b) {
  return {{"p", dec(b.p)}, {"q", dec(b.q)}, {"orientation", b.orientation}, {"text", ball_text(b)}};
}

inline nlohmann::json json_of(const LensSpace& l) {
  return {{"a", dec(l.a)}, {"b", dec(l.b)}, {"text", lens_text(l)}};
}

inline nlohmann::json json_of(const DecompositionType& t) {
  return {{"g", t.g}, {"u", t.u}, {"l", t.l}, {"h", t.h}};
}

inline nlohmann::json json_of(const Classification& c) {
  nlohmann::json j{{"kind", kind_name(c.kind)},
                   {"orientation", c.orientation},
                   {"type", json_of(c.type)}};
  j["ball"] = c.ball ? json_of(*c.ball) : nlohmann::json(nullptr);
  j["epsilon"] = c.epsilon ? nlohmann::json(*c.epsilon) : nlohmann::json(nullptr);
  if (c.ball_pair)
    j["ball_pair"] = {json_of(c.ball_pair->first), json_of(c.ball_pair->second)};
  else
    j["ball_pair"] = nullptr;
  if (c.triple)
    j["triple"] = {dec((*c.triple)[0]), dec((*c.triple)[1]), dec((*c.triple)[2])};
  else
    j["triple"] = nullptr;
  return j;
}

inline nlohmann::json json_of(const KirbyDiagram& k) {
  nlohmann::json handles = nlohmann::json::array();
  for (const KirbyTwoHandle& h : k.two_handles)
    handles.push_back({{"p", dec(h.curve.p)}, {"q", dec(h.curve.q)}, {"framing", dec(h.framing)}});
  return {{"one_handles", k.one_handles}, {"two_handles", handles}};
}

inline nlohmann::json json_of(const SuiteResult& r) {
  nlohmann::json j{{"name", r.name}, {"pass", r.pass}, {"checks", r.checks}};
  if (!r.pass) j["detail"] = r.detail;
  return j;
}

inline nlohmann::json make_doc(const std::string& command) {
  return {{"schema", 1}, {"command", command}};
}

}  // namespace horokit
