#pragma once

#include <string>

#include "dporders/order.hpp"

namespace dporders {

/// Parses the order document schema:
///   {
///     "base": {"type":"P2"} | {"type":"F","n":0|1|2},
///     "components": [{"id","class":[d]|[a,b],"e","mults":{pt:int},
///                     "nodes_at":[pt], "annotations":[...]?}],
///     "points": [{"id","parent":"base"|pt,"on_D":bool,"node":bool}],
///     "curves": [{"id","class","mults","irreducible"}]
///   }
/// Unknown keys, wrong types and semantic violations throw ParseError with a
/// message naming the offending path.
OrderData parse_order(const std::string& text);

/// Canonical serialization: sorted keys, two-space indent, class arrays as
/// integers, trailing newline. Exceptional components are never emitted
/// (they are replayed from the point forest on parse), so
/// parse_order(serialize_order(o)) == o.
std::string serialize_order(const OrderData& o);

/// Parses a blowup centre spec:
///   {"id","parent","on_D","node","incidences":{curve-or-component id:int}}
BlowupPoint parse_blowup_point(const std::string& text);

} // namespace dporders
