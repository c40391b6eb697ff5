#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "bridgeland/render.hpp"
#include "bridgeland/surgery.hpp"
#include "bridgeland/walls.hpp"
#include "json_output.hpp"

namespace bridgeland::cli {

namespace {

using nlohmann::json;

/// Bad flag value; the message starts with the flag name.
class UsageError : public std::runtime_error {
public:
    UsageError(const std::string& flag, const std::string& what) : std::runtime_error(flag + ": " + what) {}
};

class WriteError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

template <typename F>
auto checked(const std::string& flag, F&& parse) -> decltype(parse()) {
    try {
        return parse();
    } catch (const std::invalid_argument& e) {
        throw UsageError(flag, e.what());
    } catch (const std::domain_error& e) {
        throw UsageError(flag, e.what());
    } catch (const std::overflow_error& e) {
        throw UsageError(flag, e.what());
    }
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string part;
    std::istringstream in(text);
    while (std::getline(in, part, sep)) parts.push_back(part);
    if (!text.empty() && text.back() == sep) parts.emplace_back();
    return parts;
}

Rational parse_rational(const std::string& flag, const std::string& text) {
    return checked(flag, [&] { return Rational::parse(text); });
}

ChernVector parse_chern(const std::string& flag, const std::string& text) {
    return checked(flag, [&] { return ChernVector::parse(text); });
}

Region parse_region(const std::string& flag, const std::string& text) {
    const auto parts = split(text, ':');
    if (parts.size() != 2 && parts.size() != 3) throw UsageError(flag, "expected smin:smax[:umax], got '" + text + "'");
    std::optional<Rational> u_max;
    if (parts.size() == 3) u_max = parse_rational(flag, parts[2]);
    return checked(flag, [&] { return Region(parse_rational(flag, parts[0]), parse_rational(flag, parts[1]), u_max); });
}

RenderWindow parse_window(const std::string& flag, const std::string& text) {
    const auto parts = split(text, ':');
    if (parts.size() != 3) throw UsageError(flag, "expected smin:smax:tmax, got '" + text + "'");
    RenderWindow window;
    window.s_min = parse_rational(flag, parts[0]);
    window.s_max = parse_rational(flag, parts[1]);
    window.t_max = parse_rational(flag, parts[2]);
    checked(flag, [&] { window.validate(); });
    return window;
}

TorusPoint parse_torus(const std::string& flag, const std::string& text) {
    const auto parts = split(text, ',');
    if (parts.size() != 4) throw UsageError(flag, "expected four comma-separated rationals, got '" + text + "'");
    std::array<Rational, 4> coords;
    for (std::size_t i = 0; i < 4; ++i) coords[i] = parse_rational(flag, parts[i]);
    return TorusPoint(coords);
}

std::string join(const std::vector<std::string>& items, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) out += (i ? sep : "") + items[i];
    return out;
}

std::string torus_text(const TorusPoint& p) {
    std::vector<std::string> coords;
    for (const Rational& x : p.coords()) coords.push_back(x.to_string());
    return join(coords, ",");
}

std::string shape_text(const WallShape& shape) {
    if (const auto* circle = std::get_if<Circle>(&shape))
        return "circle center=" + circle->center_s.to_string() + " radius_sq=" + circle->radius_sq.to_string();
    return "vertical s=" + std::get<VerticalLine>(shape).s.to_string();
}

std::string wall_text(const Wall& wall) {
    const auto u = wall.u_at_s0();
    std::vector<std::string> witnesses;
    for (const ChernVector& w : wall.witnesses) witnesses.push_back("(" + w.to_string() + ")");
    return shape_text(wall.shape) + " u_at_s0=" + (u ? u->to_string() : "none") + " witnesses=" + join(witnesses, " ");
}

json walls_json(const std::vector<Wall>& walls) {
    json out = json::array();
    for (const Wall& w : walls) out.push_back(to_json(w));
    return out;
}

void emit(std::ostream& out, const json& doc) { out << doc.dump(2) << '\n'; }

/// Class (1,2,4-n) given either -n or --chern.
std::int64_t resolve_n(const std::optional<std::int64_t>& n, const std::optional<std::string>& chern) {
    if (n && chern) throw UsageError("--chern", "give either -n or --chern, not both");
    if (n) {
        if (*n < 0) throw UsageError("-n", "must be non-negative");
        return *n;
    }
    if (!chern) throw UsageError("-n", "one of -n or --chern is required");
    const ChernVector v = parse_chern("--chern", *chern);
    if (v.r != 1 || v.c != 2 || v.chi > 4)
        throw UsageError("--chern", "walls are tabulated for classes 1,2,4-n with n >= 0; use pseudo-walls for " +
                                        v.to_string());
    return 4 - v.chi;
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw WriteError("cannot open " + path + " for writing");
    file << contents;
    file.close();
    if (!file) throw WriteError("failed writing " + path);
}

struct Context {
    std::ostream& out;
    bool json = false;
};

// ---- subcommands ----------------------------------------------------------

void add_walls(CLI::App& app, Context& ctx, std::function<void()>& action) {
    auto* cmd = app.add_subcommand("walls", "Actual walls of (1,2,4-n) along s = 0");
    auto n = std::make_shared<std::optional<std::int64_t>>();
    auto chern = std::make_shared<std::optional<std::string>>();
    auto at_s0 = std::make_shared<bool>(false);
    cmd->add_option("-n", *n, "Number of points n");
    cmd->add_option("--chern", *chern, "Class r,c,chi of the form 1,2,4-n");
    cmd->add_flag("--at-s0", *at_s0, "Only report the u values where walls cross s = 0");
    cmd->add_flag("--json", ctx.json, "JSON output");
    cmd->callback([&, n, chern, at_s0] {
        action = [&, n, chern, at_s0] {
            const std::int64_t points = resolve_n(*n, *chern);
            const std::vector<Wall> walls = actual_walls(points);
            std::vector<Rational> us;
            for (const Wall& w : walls) us.push_back(*w.u_at_s0());
            if (ctx.json) {
                json doc = envelope("walls");
                doc["chern"] = to_json(twisted_ideal_class(points));
                json u_values = json::array();
                for (const Rational& u : us) u_values.push_back(to_json(u));
                doc["u_values"] = u_values;
                if (!*at_s0) doc["walls"] = walls_json(walls);
                emit(ctx.out, doc);
                return;
            }
            if (*at_s0) {
                for (const Rational& u : us) ctx.out << u.to_string() << '\n';
                return;
            }
            for (const Wall& w : walls) ctx.out << wall_text(w) << '\n';
            if (walls.empty()) ctx.out << "no walls\n";
        };
    });
}

void add_pseudo_walls(CLI::App& app, Context& ctx, std::function<void()>& action) {
    auto* cmd = app.add_subcommand("pseudo-walls", "Numerical walls passing the Bogomolov and sandwich filters");
    auto chern = std::make_shared<std::string>();
    auto region = std::make_shared<std::string>();
    auto rank_bound = std::make_shared<std::int64_t>(4);
    auto threads = std::make_shared<unsigned>(1);
    cmd->add_option("--chern", *chern, "Target class r,c,chi")->required();
    cmd->add_option("--region", *region, "Search window smin:smax[:umax]")->required();
    cmd->add_option("--rank-bound", *rank_bound, "Largest |rank| of a destabilizer")->capture_default_str();
    cmd->add_option("--threads", *threads, "Worker threads")->capture_default_str();
    cmd->add_flag("--json", ctx.json, "JSON output");
    cmd->callback([&, chern, region, rank_bound, threads] {
        action = [&, chern, region, rank_bound, threads] {
            const ChernVector v = parse_chern("--chern", *chern);
            const Region r = parse_region("--region", *region);
            if (*rank_bound < 1) throw UsageError("--rank-bound", "must be at least 1");
            if (*threads < 1) throw UsageError("--threads", "must be at least 1");
            if (v.is_zero() || discriminant(v) < 0)
                throw UsageError("--chern", "class " + v.to_string() + " has negative discriminant or is zero");
            const std::vector<Wall> walls = enumerate_pseudo_walls(v, r, *rank_bound, {*threads});
            if (ctx.json) {
                json doc = envelope("pseudo-walls");
                doc["chern"] = to_json(v);
                doc["rank_bound"] = *rank_bound;
                json list = json::array();
                for (const Wall& w : walls) {
                    json item = to_json(w);
                    const auto p = sample_point(w, r);
                    item["sample_point"] = p ? to_json(*p) : json(nullptr);
                    list.push_back(item);
                }
                doc["walls"] = list;
                emit(ctx.out, doc);
                return;
            }
            for (const Wall& w : walls) ctx.out << wall_text(w) << '\n';
            if (walls.empty()) ctx.out << "no pseudo-walls\n";
            const auto misses = std::count_if(walls.begin(), walls.end(), [](const Wall& w) { return !w.u_at_s0(); });
            if (misses > 0)
                ctx.out << "note: " << misses
                        << " pseudo-wall(s) do not cross s = 0; numerical filters alone do not make them actual walls\n";
        };
    });
}

void add_chambers(CLI::App& app, Context& ctx, std::function<void()>& action) {
    auto* cmd = app.add_subcommand("chambers", "Chambers along s = 0, labelled top-down");
    auto n = std::make_shared<std::optional<std::int64_t>>();
    auto chern = std::make_shared<std::optional<std::string>>();
    cmd->add_option("-n", *n, "Number of points n");
    cmd->add_option("--chern", *chern, "Class r,c,chi of the form 1,2,4-n");
    cmd->add_flag("--json", ctx.json, "JSON output");
    cmd->callback([&, n, chern] {
        action = [&, n, chern] {
            const std::int64_t points = resolve_n(*n, *chern);
            const auto list = chambers(points);
            if (ctx.json) {
                json doc = envelope("chambers");
                doc["n"] = points;
                doc["chambers"] = json::array();
                for (const Chamber& c : list) doc["chambers"].push_back(to_json(c));
                emit(ctx.out, doc);
                return;
            }
            for (const Chamber& c : list) {
                ctx.out << c.label << ": " << c.u_lower.to_string() << " < u";
                if (c.u_upper) ctx.out << " < " << c.u_upper->to_string();
                ctx.out << '\n';
            }
        };
    });
}

void add_flops(CLI::App& app, Context& ctx, std::function<void()>& action) {
    auto* cmd = app.add_subcommand("flops", "Flop bookkeeping for each wall of (1,2,4-n)");
    auto n = std::make_shared<std::optional<std::int64_t>>();
    auto chern = std::make_shared<std::optional<std::string>>();
    cmd->add_option("-n", *n, "Number of points n");
    cmd->add_option("--chern", *chern, "Class r,c,chi of the form 1,2,4-n");
    cmd->add_flag("--json", ctx.json, "JSON output");
    cmd->callback([&, n, chern] {
        action = [&, n, chern] {
            const ModuliChain chain = moduli_chain(resolve_n(*n, *chern));
            if (ctx.json) {
                json doc = envelope("flops");
                doc["n"] = chain.n;
                doc["ambient_dim"] = chain.ambient_dim;
                doc["chambers"] = json::array();
                for (const Chamber& c : chain.chambers) doc["chambers"].push_back(to_json(c));
                doc["records"] = json::array();
                for (const FlopRecord& r : chain.records) doc["records"].push_back(to_json(r));
                emit(ctx.out, doc);
                return;
            }
            ctx.out << "n=" << chain.n << " ambient_dim=" << chain.ambient_dim << " walls=" << chain.records.size()
                    << '\n';
            char line[160];
            std::snprintf(line, sizeof line, "%-8s %-8s %-10s %-10s %6s %6s %4s %6s %6s\n", "wall", "u", "e1", "e2",
                          "dim_B1", "dim_B2", "N", "dim_P", "codim");
            ctx.out << line;
            for (std::size_t i = 0; i < chain.records.size(); ++i) {
                const FlopRecord& r = chain.records[i];
                std::snprintf(line, sizeof line, "%-8s %-8s %-10s %-10s %6lld %6lld %4lld %6lld %6lld\n",
                              (chain.chambers[i].label + "|" + chain.chambers[i + 1].label).c_str(),
                              r.wall.u_at_s0()->to_string().c_str(), r.e1_class.to_string().c_str(),
                              r.e2_class.to_string().c_str(), static_cast<long long>(r.dim_B1),
                              static_cast<long long>(r.dim_B2), static_cast<long long>(r.N),
                              static_cast<long long>(r.dim_P), static_cast<long long>(r.codim));
                ctx.out << line;
                for (const std::string& flag : r.flags) ctx.out << "  flag " << flag << '\n';
            }
        };
    });
}

void add_transform(CLI::App& app, Context& ctx, std::function<void()>& action) {
    auto* cmd = app.add_subcommand("transform", "Cohomological Fourier-Mukai transform");
    auto chern = std::make_shared<std::string>();
    cmd->add_option("--chern", *chern, "Class r,c,chi")->required();
    cmd->add_flag("--json", ctx.json, "JSON output");
    cmd->callback([&, chern] {
        action = [&, chern] {
            const ChernVector v = parse_chern("--chern", *chern);
            const ChernVector image = fm_transform(v);
            if (ctx.json) {
                json doc = envelope("transform");
                doc["chern"] = to_json(v);
                doc["image"] = to_json(image);
                doc["fixed"] = image == v;
                emit(ctx.out, doc);
                return;
            }
            ctx.out << image.to_string() << (image == v ? " (fixed point of Φ)" : "") << '\n';
        };
    });
}

void add_pair(CLI::App& app, Context& ctx, std::function<void()>& action) {
    auto* cmd = app.add_subcommand("pair", "Euler pairing and discriminants of two classes");
    auto v_text = std::make_shared<std::string>();
    auto w_text = std::make_shared<std::string>();
    cmd->add_option("--v", *v_text, "First class r,c,chi")->required();
    cmd->add_option("--w", *w_text, "Second class r,c,chi")->required();
    cmd->add_flag("--json", ctx.json, "JSON output");
    cmd->callback([&, v_text, w_text] {
        action = [&, v_text, w_text] {
            const ChernVector v = parse_chern("--v", *v_text);
            const ChernVector w = parse_chern("--w", *w_text);
            const std::int64_t chi = euler_pairing(v, w);
            if (ctx.json) {
                json doc = envelope("pair");
                doc["v"] = to_json(v);
                doc["w"] = to_json(w);
                doc["euler_pairing"] = chi;
                doc["discriminant_v"] = discriminant(v);
                doc["discriminant_w"] = discriminant(w);
                emit(ctx.out, doc);
                return;
            }
            ctx.out << "chi(v,w) = " << chi << '\n'
                    << "discriminant(v) = " << discriminant(v) << '\n'
                    << "discriminant(w) = " << discriminant(w) << '\n';
        };
    });
}

void add_series(CLI::App& app, Context& ctx, std::function<void()>& action, int& exit_code) {
    auto* cmd = app.add_subcommand("series", "Wall-count generating series against the closed form");
    auto max_n = std::make_shared<std::int64_t>(20);
    cmd->add_option("--max", *max_n, "Largest n")->capture_default_str();
    cmd->add_flag("--json", ctx.json, "JSON output");
    cmd->callback([&, max_n] {
        action = [&, max_n] {
            if (*max_n < 0) throw UsageError("--max", "must be non-negative");
            if (*max_n > 100000) throw UsageError("--max", "must be at most 100000");
            const auto coefficients = series_coefficients(*max_n);
            bool all = true;
            json rows = json::array();
            for (std::int64_t n = 0; n <= *max_n; ++n) {
                const std::int64_t count = wall_count(n);
                const std::int64_t coefficient = coefficients[static_cast<std::size_t>(n)];
                const bool match = count == coefficient;
                all = all && match;
                if (ctx.json)
                    rows.push_back({{"n", n}, {"wall_count", count}, {"coefficient", coefficient}, {"match", match}});
                else
                    ctx.out << "n=" << n << ": " << count << ' ' << coefficient << " match=" << (match ? "yes" : "no")
                            << '\n';
            }
            if (ctx.json) {
                json doc = envelope("series");
                doc["rows"] = rows;
                doc["all_match"] = all;
                emit(ctx.out, doc);
            }
            if (!all) exit_code = kExitFailure;
        };
    });
}

void add_threshold(CLI::App& app, Context& ctx, std::function<void()>& action) {
    auto* cmd = app.add_subcommand("threshold", "Stability threshold u for maximal collinear length k");
    auto n = std::make_shared<std::int64_t>();
    auto k = std::make_shared<std::int64_t>();
    cmd->add_option("-n", *n, "Number of points n")->required();
    cmd->add_option("-k", *k, "Maximal collinear length k")->required();
    cmd->add_flag("--json", ctx.json, "JSON output");
    cmd->callback([&, n, k] {
        action = [&, n, k] {
            if (*n < 1) throw UsageError("-n", "must be at least 1");
            if (*k < 2 || *k > *n) throw UsageError("-k", "need 2 <= k <= n");
            const Rational u = threshold_u(*n, *k);
            if (ctx.json) {
                json doc = envelope("threshold");
                doc["n"] = *n;
                doc["k"] = *k;
                doc["u"] = to_json(u);
                emit(ctx.out, doc);
                return;
            }
            ctx.out << "u = " << u.to_string() << '\n';
        };
    });
}

void add_diagram(CLI::App& app, Context& ctx, std::function<void()>& action, int& exit_code) {
    auto* cmd = app.add_subcommand("diagram", "SVG wall-and-chamber diagram");
    struct Options {
        std::optional<std::int64_t> n;
        std::optional<std::string> chern;
        std::string window = "-1:1:3";
        std::string output;
        std::vector<std::string> guides;
        std::int64_t ppu = 100;
        bool pseudo = false;
        std::int64_t rank_bound = 4;
        bool no_axes = false;
        bool no_ticks = false;
    };
    auto o = std::make_shared<Options>();
    cmd->add_option("-n", o->n, "Number of points n (actual walls)");
    cmd->add_option("--chern", o->chern, "Target class r,c,chi");
    cmd->add_option("--window", o->window, "smin:smax:tmax")->capture_default_str();
    cmd->add_option("-o,--output", o->output, "SVG file to write; stdout when omitted");
    cmd->add_option("--guide", o->guides, "Vertical guide line at this s (repeatable)");
    cmd->add_option("--ppu", o->ppu, "Pixels per unit")->capture_default_str();
    cmd->add_flag("--pseudo", o->pseudo, "Draw every pseudo-wall meeting the window");
    cmd->add_option("--rank-bound", o->rank_bound, "Rank bound for --pseudo")->capture_default_str();
    cmd->add_flag("--no-axes", o->no_axes, "Omit axes");
    cmd->add_flag("--no-ticks", o->no_ticks, "Omit tick labels");
    cmd->add_flag("--json", ctx.json, "JSON summary instead of text");
    cmd->callback([&, o] {
        action = [&, o] {
            RenderWindow window = parse_window("--window", o->window);
            if (o->ppu < 1) throw UsageError("--ppu", "must be at least 1");
            window.pixels_per_unit = o->ppu;
            window.axes = !o->no_axes;
            window.tick_labels = !o->no_ticks;
            for (const std::string& g : o->guides) window.guides.push_back(parse_rational("--guide", g));

            std::vector<Wall> walls;
            ChernVector v;
            if (o->pseudo) {
                if (o->n && o->chern) throw UsageError("--chern", "give either -n or --chern, not both");
                if (!o->n && !o->chern) throw UsageError("-n", "one of -n or --chern is required");
                if (o->n && *o->n < 0) throw UsageError("-n", "must be non-negative");
                v = o->n ? twisted_ideal_class(*o->n) : parse_chern("--chern", *o->chern);
                if (v.is_zero() || discriminant(v) < 0)
                    throw UsageError("--chern", "class " + v.to_string() + " has negative discriminant or is zero");
                if (o->rank_bound < 1) throw UsageError("--rank-bound", "must be at least 1");
                const Region region(window.s_min, window.s_max, window.t_max * window.t_max);
                walls = enumerate_pseudo_walls(v, region, o->rank_bound);
            } else {
                const std::int64_t points = resolve_n(o->n, o->chern);
                v = twisted_ideal_class(points);
                walls = actual_walls(points);
            }
            const std::string svg = render_walls_svg(walls, window);
            std::size_t paths = 0;
            for (std::size_t pos = svg.find("<path class=\"wall\""); pos != std::string::npos;
                 pos = svg.find("<path class=\"wall\"", pos + 1))
                ++paths;
            if (!o->output.empty()) write_file(o->output, svg);
            if (ctx.json) {
                json doc = envelope("diagram");
                doc["chern"] = to_json(v);
                doc["output"] = o->output.empty() ? json(nullptr) : json(o->output);
                doc["wall_paths"] = paths;
                doc["walls"] = walls_json(walls);
                if (o->output.empty()) doc["svg"] = svg;
                emit(ctx.out, doc);
            } else if (o->output.empty()) {
                ctx.out << svg;
            } else {
                ctx.out << "wrote " << o->output << " (" << paths << " wall paths)\n";
            }
            exit_code = kExitOk;
        };
    });
}

void add_n3_map(CLI::App& app, Context& ctx, std::function<void()>& action) {
    auto* cmd = app.add_subcommand("n3-map", "The n = 3 isomorphism acting on torus points");
    struct Options {
        std::string p = "0,0,0,0", q = "0,0,0,0", y = "0,0,0,0", xhat = "0,0,0,0";
        bool inverse = false;
    };
    auto o = std::make_shared<Options>();
    cmd->add_option("--p", o->p, "Torus point a,b,c,d")->capture_default_str();
    cmd->add_option("--q", o->q, "Torus point a,b,c,d")->capture_default_str();
    cmd->add_option("--y", o->y, "Torus point a,b,c,d")->capture_default_str();
    cmd->add_option("--xhat", o->xhat, "Dual torus point a,b,c,d")->capture_default_str();
    cmd->add_flag("--inverse", o->inverse, "Apply the inverse map");
    cmd->add_flag("--json", ctx.json, "JSON output");
    cmd->callback([&, o] {
        action = [&, o] {
            const TorusQuadruple input{parse_torus("--p", o->p), parse_torus("--q", o->q), parse_torus("--y", o->y),
                                       parse_torus("--xhat", o->xhat)};
            const IntMatrix4 matrix = o->inverse ? unimodular_inverse(n3_matrix()) : n3_matrix();
            const TorusQuadruple image = apply_matrix(matrix, input);
            static const char* names[4] = {"p", "q", "y", "xhat"};
            if (ctx.json) {
                json doc = envelope("n3-map");
                doc["determinant"] = determinant(n3_matrix());
                doc["inverse"] = o->inverse;
                doc["matrix"] = matrix;
                doc["input"] = json::object();
                doc["image"] = json::object();
                for (std::size_t i = 0; i < 4; ++i) {
                    doc["input"][names[i]] = to_json(input[i]);
                    doc["image"][names[i]] = to_json(image[i]);
                }
                emit(ctx.out, doc);
                return;
            }
            ctx.out << "determinant " << determinant(n3_matrix()) << '\n';
            for (std::size_t i = 0; i < 4; ++i) ctx.out << names[i] << "' = " << torus_text(image[i]) << '\n';
        };
    });
}

std::string one_line(std::string text) {
    std::replace(text.begin(), text.end(), '\n', ' ');
    while (!text.empty() && text.back() == ' ') text.pop_back();
    return text;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Walls, chambers and flops for Bridgeland stability on a principally polarized abelian surface",
                 "bridgeland"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "bridgeland 0.1.0");

    Context ctx{out};
    std::function<void()> action;
    int exit_code = kExitOk;
    add_walls(app, ctx, action);
    add_pseudo_walls(app, ctx, action);
    add_chambers(app, ctx, action);
    add_flops(app, ctx, action);
    add_transform(app, ctx, action);
    add_pair(app, ctx, action);
    add_series(app, ctx, action, exit_code);
    add_threshold(app, ctx, action);
    add_diagram(app, ctx, action, exit_code);
    add_n3_map(app, ctx, action);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::CallForVersion& e) {
        out << e.what() << '\n';
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << one_line(e.what()) << '\n';
        return kExitUsage;
    }

    try {
        if (action) action();
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const WriteError& e) {
        err << "error: " << e.what() << '\n';
        return kExitWrite;
    } catch (const std::exception& e) {
        err << "error: " << one_line(e.what()) << '\n';
        return kExitFailure;
    }
    return exit_code;
}

}  // namespace bridgeland::cli
