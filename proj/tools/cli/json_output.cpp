#include "json_output.hpp"

namespace bridgeland::cli {

using nlohmann::json;

json to_json(const Rational& q) { return q.to_string(); }

json to_json(const ChernVector& v) { return json::array({v.r, v.c, v.chi}); }

json to_json(const StabilityPoint& p) { return {{"s", to_json(p.s())}, {"u", to_json(p.u())}}; }

json to_json(const Wall& wall) {
    json shape;
    if (const auto* circle = std::get_if<Circle>(&wall.shape))
        shape["circle"] = {{"center", to_json(circle->center_s)}, {"radius_sq", to_json(circle->radius_sq)}};
    else
        shape["vertical"] = {{"s", to_json(std::get<VerticalLine>(wall.shape).s)}};
    json witnesses = json::array();
    for (const ChernVector& w : wall.witnesses) witnesses.push_back(to_json(w));
    const auto u = wall.u_at_s0();
    return {{"shape", shape}, {"witnesses", witnesses}, {"u_at_s0", u ? to_json(*u) : json(nullptr)}};
}

json to_json(const Chamber& chamber) {
    return {{"label", chamber.label},
            {"u_lower", to_json(chamber.u_lower)},
            {"u_upper", chamber.u_upper ? to_json(*chamber.u_upper) : json(nullptr)}};
}

json to_json(const FlopRecord& record) {
    return {{"wall", to_json(record.wall)}, {"e1", to_json(record.e1_class)}, {"e2", to_json(record.e2_class)},
            {"dim_B1", record.dim_B1},      {"dim_B2", record.dim_B2},        {"N", record.N},
            {"dim_P", record.dim_P},        {"codim", record.codim},          {"flags", record.flags}};
}

json to_json(const TorusPoint& point) {
    json coords = json::array();
    for (const Rational& x : point.coords()) coords.push_back(to_json(x));
    return coords;
}

json envelope(const std::string& command) { return {{"schema_version", kSchemaVersion}, {"command", command}}; }

}  // namespace bridgeland::cli
