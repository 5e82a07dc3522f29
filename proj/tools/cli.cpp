#include "cli.hpp"

#include "planaut/serialize.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

namespace planaut::cli {
namespace {

using io::Json;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

BiPoly bipoly_arg(const std::string& name, const std::string& text)
{
    try {
        return parse_bipoly(text);
    } catch (const ParseError& e) {
        throw UsageError("argument " + name + ": " + e.what());
    }
}

UniPoly unipoly_arg(const std::string& name, const std::string& text)
{
    try {
        return parse_unipoly(text);
    } catch (const ParseError& e) {
        throw UsageError("argument " + name + ": " + e.what());
    }
}

Rational rational_arg(const std::string& text)
{
    try {
        std::string t = text;
        std::erase_if(t, [](unsigned char c) { return std::isspace(c); });
        if (t.empty()) throw std::invalid_argument("empty");
        return parse_rational(t);
    } catch (const DenominatorZero&) {
        throw;
    } catch (const std::invalid_argument&) {
        throw UsageError("not a rational number: '" + text + "'");
    }
}

/// "a,b,c" for a*x + b*y + c = 0.
Line line_arg(const std::string& text)
{
    std::vector<std::string> parts;
    std::stringstream ss(text);
    for (std::string part; std::getline(ss, part, ',');) parts.push_back(part);
    if (parts.size() != 3) throw UsageError("--line expects a,b,c; got '" + text + "'");
    return {rational_arg(parts[0]), rational_arg(parts[1]), rational_arg(parts[2])};
}

void print_factorization(std::ostream& out, const Factorization& f)
{
    if (f.empty()) out << "(x, y)\n";
    for (const auto& factor : f.factors) out << to_string(to_map(factor)) << '\n';
}

struct Context {
    std::ostream& out;
    std::ostream& err;
    bool json = false;

    void emit(const Json& j) const { out << j.dump() << '\n'; }
};

/// A negative answer: printed as a result, exit 2.
int negative(const Context& ctx, const char* name, const std::string& message, Json extra = Json::object())
{
    if (ctx.json) {
        Json j{{"error", name}, {"message", message}};
        j.update(extra);
        ctx.emit(j);
    } else {
        ctx.out << name << ": " << message << '\n';
    }
    return Negative;
}

int certificate_failure(const Context& ctx, const char* name, const std::string& message, Json extra = Json::object())
{
    ctx.err << "certificate failure (" << name << "): " << message << '\n';
    if (ctx.json) {
        Json j{{"error", name}, {"message", message}};
        j.update(extra);
        ctx.emit(j);
    }
    return CertificateFailed;
}

int report_not_automorphism(const Context& ctx, const tame::NotAutomorphism& n)
{
    if (ctx.json) {
        ctx.emit(io::to_json(n));
    } else {
        ctx.out << "automorphism: false\n"
                << "reason: " << tame::to_string(n.reason) << '\n'
                << "residual: " << to_string(n.residual) << '\n';
    }
    return Negative;
}

int dispatch_errors(const Context& ctx, const std::function<int()>& body)
{
    try {
        return body();
    } catch (const UsageError& e) {
        ctx.err << "error: " << e.what() << '\n';
        return Usage;
    } catch (const DenominatorZero& e) {
        ctx.err << "error: " << e.what() << '\n';
        return Usage;
    } catch (const keller::JacobianNotConstant& e) {
        return negative(ctx, "JacobianNotConstant", e.what(), {{"jacobian", to_string(e.jacobian)}});
    } catch (const keller::NotInjectiveOnLine& e) {
        return negative(ctx, "NotInjectiveOnLine", e.what(), {{"witness", to_string(e.witness)}});
    } catch (const InvalidLine& e) {
        return negative(ctx, "InvalidLine", e.what());
    } catch (const embedding::NotAnEmbedding& e) {
        return negative(ctx, "NotAnEmbedding", e.what(), {{"report", io::to_json(e.report)}});
    } catch (const newton::HypothesisViolated& e) {
        return negative(ctx, "HypothesisViolated", e.what(), {{"reason", newton::to_string(e.reason)}});
    } catch (const PreconditionViolated& e) {
        return negative(ctx, "PreconditionViolated", e.what(), {{"condition", e.condition}});
    } catch (const HypothesisError& e) {
        return negative(ctx, "HypothesisError", e.what());
    } catch (const keller::TheoremViolationWitness& e) {
        return certificate_failure(ctx, "TheoremViolationWitness", e.what(),
                                   {{"nf", io::to_json(e.nf)}, {"ng", io::to_json(e.ng)}});
    } catch (const embedding::AbhyankarMohViolation& e) {
        return certificate_failure(ctx, "AbhyankarMohViolation", e.what());
    } catch (const CertificateFailure& e) {
        return certificate_failure(ctx, "CertificateFailure", e.what());
    } catch (const std::exception& e) {
        ctx.err << "internal error: " << e.what() << '\n';
        return Internal;
    }
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact symbolic tools for planar polynomial maps with constant Jacobian", "planaut"};
    app.require_subcommand(1);
    Context ctx{out, err};

    std::string f, g;
    auto add_pair = [&](CLI::App* sub, const char* a, const char* b, const char* what) {
        sub->add_option(a, f, std::string("first ") + what)->required();
        sub->add_option(b, g, std::string("second ") + what)->required();
        sub->add_flag("--json", ctx.json, "print JSON");
    };

    auto* jac = app.add_subcommand("jac", "Jacobian determinant of (F, G)");
    add_pair(jac, "F", "G", "component");
    auto* polygon = app.add_subcommand("polygon", "Newton polygon of F");
    polygon->add_option("F", f, "polynomial in x, y")->required();
    polygon->add_flag("--json", ctx.json, "print JSON");
    auto* similar = app.add_subcommand("similar", "check N_G = (deg G / deg F) N_F for a Jacobian pair");
    add_pair(similar, "F", "G", "component");
    auto* is_auto = app.add_subcommand("is-auto", "decide whether (F, G) is a polynomial automorphism");
    add_pair(is_auto, "F", "G", "component");
    auto* invert = app.add_subcommand("invert", "inverse of the automorphism (F, G)");
    add_pair(invert, "F", "G", "component");
    auto* embed = app.add_subcommand("embed-check", "is t -> (P(t), Q(t)) an embedding of the line");
    add_pair(embed, "P", "Q", "coordinate, in t (or x)");
    auto* rectify = app.add_subcommand("rectify", "automorphism sending the curve (P, Q) to the axis");
    add_pair(rectify, "P", "Q", "coordinate, in t (or x)");

    auto* prove = app.add_subcommand("prove-line", "invert (F, G) from its injectivity on a line");
    add_pair(prove, "F", "G", "component");
    std::string line_text, certificate_path;
    prove->add_option("--line", line_text, "a,b,c for the line a*x + b*y + c = 0")->required();
    prove->add_option("--certificate", certificate_path, "write the certificate JSON to this path");

    auto* gen = app.add_subcommand("gen-auto", "random tame automorphism, deterministic in the seed");
    std::uint64_t seed = 0;
    unsigned factors = 3, max_deg = 3, coeff_bound = 5;
    gen->add_option("--seed", seed, "generator seed")->required();
    gen->add_option("--factors", factors, "number of elementary factors")->capture_default_str();
    gen->add_option("--max-deg", max_deg, "largest shift degree")->capture_default_str()->check(CLI::PositiveNumber);
    gen->add_option("--coeff-bound", coeff_bound, "integer coefficients lie in [-B, B]")->capture_default_str();
    gen->add_flag("--json", ctx.json, "print JSON");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? Success : Usage;
    }

    return dispatch_errors(ctx, [&]() -> int {
        if (jac->parsed()) {
            const auto r = keller::is_keller({bipoly_arg("F", f), bipoly_arg("G", g)});
            if (ctx.json)
                ctx.emit(io::to_json(r));
            else
                out << to_string(r.jacobian) << '\n';
            return Success;
        }
        if (polygon->parsed()) {
            const auto poly = newton::newton_polygon(bipoly_arg("F", f));
            if (ctx.json)
                ctx.emit(io::to_json(poly));
            else
                out << newton::to_string(poly) << '\n';
            return Success;
        }
        if (similar->parsed()) {
            const auto r = newton::similarity_check(bipoly_arg("F", f), bipoly_arg("G", g));
            if (ctx.json) {
                ctx.emit(io::to_json(r));
            } else {
                out << "similar: " << (r.similar ? "true" : "false") << '\n'
                    << "factor: " << to_string(r.factor) << '\n'
                    << "N_F: " << newton::to_string(r.nf) << '\n'
                    << "N_G: " << newton::to_string(r.ng) << '\n';
            }
            if (!r.similar) {
                err << "certificate failure: polygons of a Jacobian pair are not similar\n";
                return CertificateFailed;
            }
            return Success;
        }
        if (is_auto->parsed() || invert->parsed()) {
            const PolyMap h{bipoly_arg("F", f), bipoly_arg("G", g)};
            const auto d = tame::decide_automorphism(h);
            if (const auto* n = std::get_if<tame::NotAutomorphism>(&d)) return report_not_automorphism(ctx, *n);
            const auto& fac = std::get<Factorization>(d);
            if (is_auto->parsed()) {
                if (ctx.json) {
                    ctx.emit({{"automorphism", true}, {"factorization", io::to_json(fac)}});
                } else {
                    out << "automorphism: true\n";
                    print_factorization(out, fac);
                }
                return Success;
            }
            const Factorization inv = factorization_inverse(fac);
            const PolyMap inverse = factorization_to_map(inv);
            if (ctx.json)
                ctx.emit({{"inverse", io::to_json(inverse)}, {"factorization", io::to_json(inv)}});
            else
                out << to_string(inverse) << '\n';
            return Success;
        }
        if (embed->parsed()) {
            const auto r = embedding::is_embedding({unipoly_arg("P", f), unipoly_arg("Q", g)});
            if (ctx.json) {
                ctx.emit(io::to_json(r));
            } else {
                out << "injective: " << (r.injective ? "true" : "false") << '\n'
                    << "immersion: " << (r.immersion ? "true" : "false") << '\n'
                    << "witness: " << (r.witness ? to_string(*r.witness) : "none") << '\n';
            }
            return r.is_embedding() ? Success : Negative;
        }
        if (rectify->parsed()) {
            const Parametrization gamma{unipoly_arg("P", f), unipoly_arg("Q", g)};
            const Factorization phi = embedding::rectify(gamma);
            if (ctx.json) {
                ctx.emit({{"curve", io::to_json(gamma)},
                          {"phi", io::to_json(phi)},
                          {"h1", io::to_json(factorization_inverse(phi))}});
            } else {
                print_factorization(out, phi);
            }
            return Success;
        }
        if (prove->parsed()) {
            const PolyMap h{bipoly_arg("F", f), bipoly_arg("G", g)};
            const Line l = line_arg(line_text);
            const auto r = keller::prove_line(h, l);
            if (!certificate_path.empty()) {
                std::ofstream file(certificate_path);
                if (!file) throw UsageError("cannot write certificate to '" + certificate_path + "'");
                file << io::to_json(r.certificate).dump(2) << '\n';
            }
            if (ctx.json)
                ctx.emit({{"inverse", io::to_json(r.inverse)}, {"factorization", io::to_json(r.factorization)}});
            else
                out << to_string(r.inverse) << '\n';
            return Success;
        }
        // gen-auto
        const Factorization fac = tame::random_tame(seed, factors, max_deg, coeff_bound);
        const PolyMap h = factorization_to_map(fac);
        if (ctx.json)
            ctx.emit({{"seed", seed}, {"factorization", io::to_json(fac)}, {"map", io::to_json(h)}});
        else
            out << to_string(h) << '\n';
        return Success;
    });
}

}  // namespace planaut::cli
