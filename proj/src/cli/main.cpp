// snake-qchar: exact q-characters of snake modules in types A and B, their
// Theorem-A verification, skew-tableau expressions, and classical restriction.
//
// Exit codes: 0 success, 1 domain error (offending datum in the message),
// 2 usage/parse error, 3 verification or comparison failure.

#include <cstdio>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "snakechar/cartan.hpp"
#include "snakechar/lattice.hpp"
#include "snakechar/paths.hpp"
#include "snakechar/qchar.hpp"
#include "snakechar/snakes.hpp"
#include "snakechar/tableaux.hpp"

using nlohmann::ordered_json;
using namespace snakechar;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Common {
    std::string type = "A";
    int rank = 1;
    std::string snake, diagram;
    std::string output = "text";
};

void add_common(CLI::App* cmd, Common& c, bool with_snake, bool with_diagram) {
    cmd->add_option("--type", c.type, "Lie type")->required()->check(CLI::IsMember({"A", "B"}));
    cmd->add_option("--rank", c.rank, "rank N >= 1")->required()->check(CLI::Range(1, 64));
    if (with_snake)
        cmd->add_option("--snake", c.snake, "snake points \"i1,k1;i2,k2;...\"");
    if (with_diagram)
        cmd->add_option("--diagram", c.diagram, "skew diagram \"col:topRow:height;...\"");
    cmd->add_option("--output", c.output, "output format")
        ->check(CLI::IsMember({"json", "text"}));
}

CartanData make_cd(const Common& c) {
    return cartan_data(LieType{c.type == "A" ? Kind::A : Kind::B, c.rank});
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t from = 0;
    while (from <= s.size()) {
        const std::size_t to = s.find(sep, from);
        if (to == std::string::npos) {
            out.push_back(s.substr(from));
            break;
        }
        out.push_back(s.substr(from, to - from));
        from = to + 1;
    }
    return out;
}

int parse_int(const std::string& s, const std::string& what) {
    try {
        std::size_t pos = 0;
        const int v = std::stoi(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw UsageError(what + ": \"" + s + "\" is not an integer");
    }
}

std::vector<std::pair<int, int>> parse_snake(const std::string& s) {
    if (s.empty()) throw UsageError("--snake: empty");
    std::vector<std::pair<int, int>> pts;
    for (const auto& part : split(s, ';')) {
        const auto nums = split(part, ',');
        if (nums.size() != 2)
            throw UsageError("--snake: expected \"i,k\" pairs separated by ';', got \"" + part +
                             "\"");
        pts.emplace_back(parse_int(nums[0], "--snake"), parse_int(nums[1], "--snake"));
    }
    return pts;
}

std::vector<DiagramColumn> parse_diagram(const std::string& s) {
    if (s.empty()) throw UsageError("--diagram: empty");
    std::vector<DiagramColumn> cols;
    for (const auto& part : split(s, ';')) {
        const auto nums = split(part, ':');
        if (nums.size() != 3)
            throw UsageError(
                "--diagram: expected \"col:topRow:height\" triples separated by ';', got \"" +
                part + "\"");
        cols.push_back({parse_int(nums[0], "--diagram"), parse_int(nums[1], "--diagram"),
                        parse_int(nums[2], "--diagram")});
    }
    return cols;
}

Snake snake_from_options(const CartanData& cd, const Common& c) {
    const bool have_s = !c.snake.empty(), have_d = !c.diagram.empty();
    if (have_s == have_d)
        throw UsageError("give exactly one of --snake or --diagram");
    if (have_s) return make_snake(cd, parse_snake(c.snake));
    return snake_from_diagram(cd, make_diagram(cd, parse_diagram(c.diagram)));
}

SkewDiagram diagram_from_options(const CartanData& cd, const Common& c) {
    const bool have_s = !c.snake.empty(), have_d = !c.diagram.empty();
    if (have_s == have_d)
        throw UsageError("give exactly one of --snake or --diagram");
    if (have_d) return make_diagram(cd, parse_diagram(c.diagram));
    return diagram_from_snake(cd, make_snake(cd, parse_snake(c.snake)));
}

// ---- rendering -------------------------------------------------------------

std::string eps_str(const EpsRational& y) {
    if (y.e == 0) return std::to_string(y.m);
    return std::to_string(y.m) + (y.e > 0 ? "+e" : "-e");
}

std::string points_str(const std::vector<std::pair<int, int>>& pts) {
    std::string out;
    for (const auto& [i, k] : pts) {
        if (!out.empty()) out += ' ';
        out += "(" + std::to_string(i) + "," + std::to_string(k) + ")";
    }
    return out;
}

ordered_json mono_json(const YMonomial& m) {
    ordered_json arr = ordered_json::array();
    for (const auto& f : m.factors()) arr.push_back({f.i, f.k, f.e});
    return arr;
}

ordered_json snake_json(const std::vector<std::pair<int, int>>& pts) {
    ordered_json arr = ordered_json::array();
    for (const auto& [i, k] : pts) arr.push_back({i, k});
    return arr;
}

ordered_json qchar_json(const QCharacter& ch) {
    ordered_json j;
    j["type"] = to_string(ch.lie_type.kind);
    j["rank"] = ch.lie_type.rank;
    j["snake"] = snake_json(ch.snake);
    ordered_json terms = ordered_json::array();
    for (const auto& [m, mult] : ch.terms) {
        ordered_json t;
        t["m"] = mono_json(m);
        t["mult"] = mult;
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

void print_qchar_text(const CartanData& cd, const QCharacter& ch) {
    std::cout << "type " << to_string(cd.lie_type.kind) << " rank " << cd.N() << "\n";
    std::cout << "snake: " << points_str(ch.snake) << "\n";
    std::cout << "terms: " << ch.total_terms() << "\n";
    for (const auto& [m, mult] : ch.terms) {
        std::cout << m.str();
        if (mult != 1) std::cout << " x" << mult;
        std::cout << "\n";
    }
}

// ---- subcommands -----------------------------------------------------------

int cmd_paths(const Common& c) {
    const CartanData cd = make_cd(c);
    if (c.snake.empty()) throw UsageError("--snake is required");
    const auto pts = parse_snake(c.snake);
    if (pts.size() != 1)
        throw UsageError("paths expects a single point, got " + std::to_string(pts.size()));
    const auto [i, k] = pts[0];
    const auto paths = gen_paths(cd, i, k);
    if (c.output == "json") {
        ordered_json j;
        j["type"] = c.type;
        j["rank"] = c.rank;
        j["point"] = {i, k};
        ordered_json arr = ordered_json::array();
        for (const auto& p : paths) {
            ordered_json pj;
            ordered_json pp = ordered_json::array();
            for (const auto& pt : p.pts) pp.push_back({pt.x, pt.y.m, pt.y.e});
            pj["points"] = std::move(pp);
            pj["monomial"] = mono_json(path_monomial(p));
            arr.push_back(std::move(pj));
        }
        j["paths"] = std::move(arr);
        std::cout << j.dump() << "\n";
        return 0;
    }
    std::cout << "type " << c.type << " rank " << c.rank << "\n";
    std::cout << "point: (" << i << "," << k << ")\n";
    std::cout << "paths: " << paths.size() << "\n";
    for (const auto& p : paths) {
        std::string line;
        for (const auto& pt : p.pts) {
            if (!line.empty()) line += ' ';
            line += "(" + std::to_string(pt.x) + "," + eps_str(pt.y) + ")";
        }
        std::cout << line << "  ->  " << path_monomial(p).str() << "\n";
    }
    return 0;
}

int cmd_qchar(const Common& c) {
    const CartanData cd = make_cd(c);
    const Snake s = snake_from_options(cd, c);
    const QCharacter ch = snake_qchar(cd, s);
    if (c.output == "json")
        std::cout << qchar_json(ch).dump() << "\n";
    else
        print_qchar_text(cd, ch);
    return 0;
}

int cmd_verify(const Common& c) {
    const CartanData cd = make_cd(c);
    const Snake s = snake_from_options(cd, c);
    const QCharacter ch = snake_qchar(cd, s);
    const TheoremAReport rep = verify_theorem_a(cd, ch);
    if (c.output == "json") {
        ordered_json j;
        j["type"] = c.type;
        j["rank"] = c.rank;
        j["snake"] = snake_json(ch.snake);
        j["terms"] = ch.total_terms();
        j["cond_i"] = rep.cond_i;
        j["cond_ii"] = rep.cond_ii;
        j["cond_iii"] = rep.cond_iii;
        j["ok"] = rep.ok();
        ordered_json doms = ordered_json::array();
        for (const auto& m : rep.dominants) doms.push_back(mono_json(m));
        j["dominants"] = std::move(doms);
        if (rep.ii_witness) {
            const auto& w = *rep.ii_witness;
            j["cond_ii_witness"] = {{"x", mono_json(w.x)},
                                    {"lift1", {w.lift1.first, w.lift1.second}},
                                    {"lift2", {w.lift2.first, w.lift2.second}}};
        }
        if (rep.iii_witness) {
            const auto& w = *rep.iii_witness;
            ordered_json wj;
            wj["node"] = w.node;
            wj["member"] = mono_json(w.member);
            j["cond_iii_witness"] = std::move(wj);
        }
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "type " << c.type << " rank " << c.rank << "\n";
        std::cout << "snake: " << points_str(ch.snake) << "\n";
        std::cout << "terms: " << ch.total_terms() << "\n";
        std::cout << "cond_i: " << (rep.cond_i ? "pass" : "fail") << "\n";
        if (!rep.cond_i) {
            std::cout << "  dominant monomials (" << rep.dominants.size() << "):\n";
            for (const auto& m : rep.dominants) std::cout << "    " << m.str() << "\n";
        }
        std::cout << "cond_ii: " << (rep.cond_ii ? "pass" : "fail") << "\n";
        if (rep.ii_witness) {
            const auto& w = *rep.ii_witness;
            std::cout << "  witness: x = " << w.x.str() << " lifted by (" << w.lift1.first << ","
                      << w.lift1.second << ") and (" << w.lift2.first << "," << w.lift2.second
                      << ")\n";
        }
        std::cout << "cond_iii: " << (rep.cond_iii ? "pass" : "fail") << "\n";
        if (rep.iii_witness) {
            const auto& w = *rep.iii_witness;
            std::cout << "  witness: node " << w.node << ", member " << w.member.str() << "\n";
        }
        std::cout << "result: " << (rep.ok() ? "pass" : "fail") << "\n";
    }
    return rep.ok() ? 0 : 3;
}

int cmd_tableaux(const Common& c) {
    const CartanData cd = make_cd(c);
    const SkewDiagram d = diagram_from_options(cd, c);
    const QCharacter ch = tableaux_qchar(cd, d);
    if (c.output == "json") {
        std::cout << qchar_json(ch).dump() << "\n";
    } else {
        std::cout << "type " << c.type << " rank " << c.rank << "\n";
        std::cout << "diagram:";
        for (const auto& col : d.cols)
            std::cout << " " << col.col << ":" << col.top << ":" << col.height;
        std::cout << "\n";
        print_qchar_text(cd, ch);
    }
    return 0;
}

int cmd_compare(const Common& c) {
    const CartanData cd = make_cd(c);
    const SkewDiagram d = diagram_from_options(cd, c);
    const KosReport rep = kos_check(cd, d);
    if (c.output == "json") {
        ordered_json j;
        j["type"] = c.type;
        j["rank"] = c.rank;
        j["snake"] = snake_json(snake_from_diagram(cd, d).points);
        j["per_column_bijection"] = rep.per_column_bijection;
        j["adjacency_preserved"] = rep.adjacency_preserved;
        j["tableau_count"] = rep.tableau_count;
        j["tuple_count"] = rep.tuple_count;
        j["direct"] = rep.direct;
        j["direct_equal"] = rep.direct_equal;
        j["equal"] = rep.equal;
        if (!rep.detail.empty()) j["detail"] = rep.detail;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "type " << c.type << " rank " << c.rank << "\n";
        std::cout << "snake: " << points_str(snake_from_diagram(cd, d).points) << "\n";
        std::cout << "per_column_bijection: " << (rep.per_column_bijection ? "pass" : "fail")
                  << "\n";
        std::cout << "adjacency_preserved: " << (rep.adjacency_preserved ? "pass" : "fail")
                  << "\n";
        std::cout << "tableau_count: " << rep.tableau_count << "\n";
        std::cout << "tuple_count: " << rep.tuple_count << "\n";
        std::cout << "direct: " << (rep.direct ? (rep.direct_equal ? "equal" : "DIFFER")
                                               : "skipped")
                  << "\n";
        if (!rep.detail.empty()) std::cout << "detail: " << rep.detail << "\n";
        std::cout << "result: " << (rep.equal ? "equal" : "NOT EQUAL") << "\n";
    }
    return rep.equal ? 0 : 3;
}

int cmd_restrict(const Common& c) {
    const CartanData cd = make_cd(c);
    const Snake s = snake_from_options(cd, c);
    const QCharacter ch = snake_qchar(cd, s);
    const RestrictedCharacter rc = restricted_character(cd, ch);
    if (c.output == "json") {
        ordered_json j;
        j["type"] = c.type;
        j["rank"] = c.rank;
        j["snake"] = snake_json(ch.snake);
        ordered_json ws = ordered_json::array();
        for (const auto& [w, mult] : rc.weights) {
            ordered_json wj;
            wj["w"] = w.coords;
            wj["mult"] = mult;
            ws.push_back(std::move(wj));
        }
        j["weights"] = std::move(ws);
        j["weyl_invariant"] = rc.weyl_invariant;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "type " << c.type << " rank " << c.rank << "\n";
        std::cout << "snake: " << points_str(ch.snake) << "\n";
        std::cout << "weights: " << rc.weights.size() << " distinct\n";
        for (const auto& [w, mult] : rc.weights) {
            std::string line = "(";
            for (std::size_t t = 0; t < w.coords.size(); ++t) {
                if (t) line += ",";
                line += std::to_string(w.coords[t]);
            }
            line += ")";
            std::cout << line << " x" << mult << "\n";
        }
        std::cout << "weyl_invariant: " << (rc.weyl_invariant ? "true" : "false") << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact q-characters of snake modules (types A and B)"};
    app.require_subcommand(1);
    Common copt;
    int (*run)(const Common&) = nullptr;

    const auto wire = [&](CLI::App* cmd, int (*fn)(const Common&), bool with_snake,
                          bool with_diagram) {
        add_common(cmd, copt, with_snake, with_diagram);
        cmd->callback([&run, fn] { run = fn; });
    };
    wire(app.add_subcommand("paths", "non-overlapping paths of one point of X"), cmd_paths,
         true, false);
    wire(app.add_subcommand("qchar", "q-character of a snake module"), cmd_qchar, true, true);
    wire(app.add_subcommand("verify", "verify the defining properties of the q-character"),
         cmd_verify, true, true);
    wire(app.add_subcommand("tableaux", "q-character via skew tableaux"), cmd_tableaux, true,
         true);
    wire(app.add_subcommand("compare", "compare path and tableau expressions"), cmd_compare,
         true, true);
    wire(app.add_subcommand("restrict", "restriction to the classical character"),
         cmd_restrict, true, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        std::cerr << app.help();
        return 2;
    }

    try {
        return run(copt);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
