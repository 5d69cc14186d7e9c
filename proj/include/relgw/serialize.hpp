#ifndef RELGW_SERIALIZE_HPP
#define RELGW_SERIALIZE_HPP

#include <relgw/givental.hpp>
#include <relgw/graphs.hpp>
#include <relgw/quantum.hpp>
#include <relgw/solver.hpp>
#include <relgw/symbolic.hpp>

#include <json.hpp>

namespace relgw
{

using Json = nlohmann::ordered_json;

// Rationals are strings "p" or "p/q".
Json to_json(const Rational &r);
// [{"i", "k", "coef"}] in basis order.
Json to_json(const InsClass &c);
// [{"q", "class"}] by increasing q-power.
Json to_json(const QSeriesClass &s);
// [{"coef", "powers": {symbol: exponent}}] in monomial order.
Json to_json(const Poly &p);
// Edges are [zero-side slot, inf-side slot].
Json to_json(const BipartiteGraph &g);
// Inverse of to_json; throws parse_error on malformed input.
BipartiteGraph graph_from_json(const Json &j);
Json to_json(const StructureTable &t);
Json to_json(const VerifyReport &r);
Json to_json(const TVar &v);
// [{"hbar", "coef", "vars", "derivs"}].
Json to_json(const DiffOperator &op);
Json to_json(const BracketReport &r);
Json to_json(const ResidualReport &r);

} // namespace relgw

#endif
