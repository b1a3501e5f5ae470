#include "bsnake/render.hpp"
#include "bsnake/tableaux.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

namespace {

using namespace bsnake;

Algebra parse_type(const std::string& s) {
    if (s.size() < 2 || (s[0] != 'B' && s[0] != 'b'))
        throw parse_error("algebra type must look like B2, B3, ...", 0);
    int n = 0;
    try {
        n = std::stoi(s.substr(1));
    } catch (...) {
        throw parse_error("algebra type must look like B2, B3, ...", 1);
    }
    return Algebra::type_b(n);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open file: " + path, 0);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw parse_error("cannot open output file: " + path, 0);
    out << text;
}

void print_char_text(std::ostream& os, const QCharacter& chi) {
    for (const auto& [m, c] : chi.sorted_terms()) os << c << ' ' << m.str() << '\n';
}

int cmd_qchar(const std::string& type, const std::string& mono, bool json, bool factor) {
    Algebra alg = parse_type(type);
    Monomial m = Monomial::parse(mono);
    if (factor) {
        auto parts = prime_split(alg, x_sequence(alg, m));
        QCharacter product;
        product.add(Monomial{});
        for (std::size_t i = 0; i < parts.size(); ++i) {
            Monomial mi;
            for (const auto& p : parts[i]) mi *= Monomial::y(p.node, p.level);
            QCharacter chi = snake_qchar(alg, mi);
            std::cout << "factor " << i + 1 << ": " << mi.str() << '\n';
            if (json) std::cout << chi.to_json() << '\n';
            else print_char_text(std::cout, chi);
            product = product * chi;
        }
        std::cout << "product:\n";
        if (json) std::cout << product.to_json() << '\n';
        else print_char_text(std::cout, product);
        return 0;
    }
    QCharacter chi = snake_qchar(alg, m);
    if (json) std::cout << chi.to_json() << '\n';
    else print_char_text(std::cout, chi);
    return 0;
}

const char* position_name(Position p) {
    switch (p) {
        case Position::MinimalSnake: return "minimal-snake";
        case Position::Snake: return "snake";
        case Position::ExtendedOnly: return "extended";
        default: return "none";
    }
}

int cmd_classify(const std::string& type, const std::string& mono) {
    Algebra alg = parse_type(type);
    auto seq = x_sequence(alg, Monomial::parse(mono));
    bool tame = is_extended_snake(alg, seq);
    std::cout << "tame: " << (tame ? "true" : "false") << '\n';
    std::cout << "thin: " << (tame ? "true" : "false") << '\n';
    for (std::size_t t = 1; t < seq.size(); ++t) {
        auto pc = position_class(alg, seq[t - 1], seq[t]);
        std::cout << '(' << seq[t - 1].node << ',' << seq[t - 1].level << ") -> ("
                  << seq[t].node << ',' << seq[t].level << "): " << position_name(pc.kind);
        if (pc.shift) std::cout << " shift=" << *pc.shift;
        std::cout << '\n';
    }
    return 0;
}

int cmd_tableaux(const std::string& file, bool enumerate, bool dominant, bool monomial,
                 bool reduce) {
    auto [alg, d] = diagram_from_json(read_file(file));
    auto verdict = validate_diagram(alg, d);
    if (!verdict.ok) {
        std::cerr << "invalid diagram: " << verdict.violation << '\n';
        return 2;
    }
    if (dominant) std::cout << ascii_tableau(dominant_tableau(alg, d));
    if (monomial) std::cout << diagram_dominant_monomial(alg, d).str() << '\n';
    if (reduce) std::cout << diagram_to_json(alg, related_generic(alg, d)) << '\n';
    if (enumerate) {
        auto tabs = enum_tableaux(alg, d);
        std::cout << "tableaux: " << tabs.size() << '\n';
        for (const auto& t : tabs) {
            std::cout << "cols=[";
            for (int j = 1; j <= d.column_count(); ++j) {
                if (j > 1) std::cout << '|';
                for (std::size_t a = 0; a < t.fill[j - 1].size(); ++a) {
                    if (a) std::cout << ',';
                    std::cout << t.fill[j - 1][a].token();
                }
            }
            std::cout << "] M=" << tab_monomial(alg, t).str() << '\n';
        }
    }
    return 0;
}

int cmd_verify(const std::string& type, const std::string& mono, const std::string& against) {
    Algebra alg = parse_type(type);
    Monomial m = Monomial::parse(mono);
    std::vector<Monomial> candidates;
    if (against.empty()) {
        QCharacter chi = snake_qchar(alg, m);
        for (const auto& [t, c] : chi.sorted_terms()) candidates.push_back(t);
    } else {
        QCharacter chi = QCharacter::from_json(read_file(against));
        for (const auto& [t, c] : chi.sorted_terms()) candidates.push_back(t);
    }
    auto res = verify_thin_criteria(alg, m, candidates);
    if (res.pass) {
        std::cout << "verdict: pass (" << candidates.size() << " monomials)\n";
        return 0;
    }
    std::cout << "verdict: fail condition=" << res.condition << " " << res.detail << '\n';
    return 3;
}

int cmd_render(bool paths, bool tableau, const std::string& type, const std::string& owner,
               const std::string& which, const std::string& format,
               const std::string& diagram_file, const std::string& out) {
    if (paths) {
        Algebra alg = parse_type(type);
        std::vector<Path> drawn;
        if (!owner.empty()) {
            auto comma = owner.find(',');
            if (comma == std::string::npos)
                throw parse_error("owner must be given as i,k", 0);
            SpectralPoint o{std::stoi(owner.substr(0, comma)),
                            std::stoi(owner.substr(comma + 1))};
            if (which == "highest") drawn.push_back(highest_path(alg, o));
            else if (which == "lowest") drawn.push_back(lowest_path(alg, o));
            else drawn = enum_paths(alg, o);
        }
        if (format == "json") {
            std::string text;
            for (const auto& p : drawn) text += path_to_json(p) + "\n";
            write_output(out, text);
        } else {
            write_output(out, svg_paths(alg, drawn));
        }
        return 0;
    }
    if (tableau) {
        auto [alg, d] = diagram_from_json(read_file(diagram_file));
        auto verdict = validate_diagram(alg, d);
        if (!verdict.ok) {
            std::cerr << "invalid diagram: " << verdict.violation << '\n';
            return 2;
        }
        write_output(out, ascii_tableau(dominant_tableau(alg, d)));
        return 0;
    }
    throw parse_error("render needs --paths or --tableau", 0);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"q-characters of extended snake modules in type B"};
    app.require_subcommand(1);

    std::string type = "B2", mono, file, against, owner, which = "all", format = "svg", out;
    bool json = false, text = false, factor = false;
    bool enumerate = false, dominant = false, monomial = false, reduce = false;
    bool rpaths = false, rtableau = false;

    auto* qchar = app.add_subcommand("qchar", "compute a q-character");
    qchar->add_option("--type", type, "algebra type, e.g. B3");
    qchar->add_option("--m", mono, "dominant monomial")->required();
    qchar->add_flag("--json", json, "JSON output");
    qchar->add_flag("--text", text, "plain text output (default)");
    qchar->add_flag("--factor", factor, "factor into prime parts first");

    auto* classify = app.add_subcommand("classify", "tame/thin classification");
    classify->add_option("--type", type, "algebra type")->required();
    classify->add_option("--m", mono, "dominant monomial")->required();

    auto* tabs = app.add_subcommand("tableaux", "super skew tableaux operations");
    tabs->add_option("--diagram", file, "diagram JSON file")->required();
    tabs->add_flag("--enumerate", enumerate, "enumerate all tableaux");
    tabs->add_flag("--dominant", dominant, "print the dominant tableau");
    tabs->add_flag("--monomial", monomial, "print the dominant monomial");
    tabs->add_flag("--reduce", reduce, "print the related generic diagram");

    auto* verify = app.add_subcommand("verify", "run the thin-special verifier");
    verify->add_option("--type", type, "algebra type")->required();
    verify->add_option("--m", mono, "dominant monomial")->required();
    verify->add_option("--against", against, "candidate set (q-character JSON)");

    auto* render = app.add_subcommand("render", "render paths or tableaux");
    render->add_flag("--paths", rpaths, "render a path family as SVG");
    render->add_flag("--tableau", rtableau, "render the dominant tableau as text");
    render->add_option("--type", type, "algebra type");
    render->add_option("--owner", owner, "lattice point i,k");
    render->add_option("--which", which, "all|highest|lowest");
    render->add_option("--format", format, "svg|json");
    render->add_option("--diagram", file, "diagram JSON file");
    render->add_option("-o,--out", out, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (qchar->parsed()) return cmd_qchar(type, mono, json && !text, factor);
        if (classify->parsed()) return cmd_classify(type, mono);
        if (tabs->parsed()) return cmd_tableaux(file, enumerate, dominant, monomial, reduce);
        if (verify->parsed()) return cmd_verify(type, mono, against);
        if (render->parsed())
            return cmd_render(rpaths, rtableau, type, owner, which, format, file, out);
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const not_extended_snake& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
