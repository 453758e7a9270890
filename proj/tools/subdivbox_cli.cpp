#include <cstdio>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "subdivbox/boxspline.hpp"
#include "subdivbox/catalog.hpp"
#include "subdivbox/convergence.hpp"
#include "subdivbox/decompose.hpp"
#include "subdivbox/mask.hpp"
#include "subdivbox/sumrules.hpp"
#include "subdivbox/verify_suite.hpp"

using namespace subdivbox;

namespace {

std::string json_escape(const std::string& s) {
    std::string out;
    for (char ch : s) {
        switch (ch) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(ch) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", static_cast<unsigned char>(ch));
                    out += buf;
                } else {
                    out += ch;
                }
        }
    }
    return out;
}

std::string jstr(const std::string& s) { return "\"" + json_escape(s) + "\""; }
std::string jbool(bool b) { return b ? "true" : "false"; }

// Exact value twice: as a fraction string and as a 12-digit decimal.
std::string jrat(const Rational& q) {
    return "{\"fraction\": " + jstr(rat_to_string(q)) +
           ", \"decimal\": " + jstr(rat_to_decimal(q)) + "}";
}

std::string jints(const Exponents& e) {
    std::string s = "[";
    for (std::size_t i = 0; i < e.size(); ++i) s += (i ? ", " : "") + std::to_string(e[i]);
    return s + "]";
}

// Polynomials travel in the interchange shape {"dim", "denominator", "coeffs"}.
std::string jpoly(const LaurentPoly& p) { return mask_to_json(Mask(p)); }

std::string rat2(const Rational& q) { return rat_to_string(q) + " = " + rat_to_decimal(q); }

std::string tuple_str(const Exponents& e) {
    std::string s = "(";
    for (std::size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + std::to_string(e[i]);
    return s + ")";
}

std::string point_str(const std::vector<Rational>& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + rat_to_string(p[i]);
    return s + ")";
}

std::string jpoint(const std::vector<Rational>& p) {
    std::string s = "[";
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? ", " : "") + jstr(rat_to_string(p[i]));
    return s + "]";
}

struct MaskInput {
    Mask mask{LaurentPoly(1)};
    std::string source;  // as given on the command line
    std::string origin;  // "catalog" or "file"
};

// Catalog names win over files (frictionless reproduction of the named schemes).
MaskInput resolve_mask(const std::string& src) {
    try {
        auto entry = get_scheme(src);
        return {entry.mask, src, "catalog"};
    } catch (const UnknownScheme&) {
    }
    return {load_mask_file(src), src, "file"};
}

std::string describe_path(int dim, int order, Variant variant) {
    std::ostringstream os;
    if (dim == 2)
        os << "bivariate list I_" << order;
    else
        os << order << "-fold generator products over the first two sections (d = " << dim << ")";
    os << (variant == Variant::modified ? ", modified" : ", standard");
    return os.str();
}

void print_mask_header(std::ostream& os, const MaskInput& in) {
    os << "mask: " << in.source << " (" << in.origin << ")\n";
    os << "dim: " << in.mask.dim() << "\n";
}

int cmd_analyze(const MaskInput& in, bool json) {
    const Mask& m = in.mask;
    auto interp = is_interpolatory(m);
    auto rep = sumrule_order(m);

    if (json) {
        std::ostringstream os;
        os << "{\"command\": \"analyze\", \"input\": " << jstr(in.source)
           << ", \"origin\": " << jstr(in.origin) << ", \"mask\": " << mask_to_json(m)
           << ", \"result\": {\"dim\": " << m.dim() << ", \"terms\": " << m.symbol().term_count()
           << ", \"at_one\": " << jrat(rep.at_one)
           << ", \"normalized\": " << jbool(rep.normalized)
           << ", \"interpolatory\": " << jbool(interp.interpolatory);
        if (interp.interpolatory)
            os << ", \"coset\": " << jints(interp.e) << ", \"shift\": " << jints(interp.beta);
        os << ", \"order\": " << rep.order << ", \"capped\": " << jbool(rep.capped);
        if (rep.witness)
            os << ", \"witness\": {\"j\": " << jints(rep.witness->j)
               << ", \"eps\": " << jpoint(rep.witness->eps)
               << ", \"value\": " << jrat(rep.witness->value) << "}";
        os << "}}";
        std::cout << os.str() << "\n";
        return 0;
    }

    std::cout << "command: analyze\n";
    print_mask_header(std::cout, in);
    std::cout << "terms: " << m.symbol().term_count() << "\n";
    if (auto box = m.symbol().support_box())
        std::cout << "support box: " << tuple_str(box->first) << " .. " << tuple_str(box->second)
                  << "\n";
    std::cout << "a(1): " << rat2(rep.at_one) << (rep.normalized ? "" : "  [not 2^d]") << "\n";
    if (interp.interpolatory)
        std::cout << "interpolatory: yes, submask at e = " << tuple_str(interp.e) << " is z^"
                  << tuple_str(interp.beta) << "\n";
    else
        std::cout << "interpolatory: no\n";
    std::cout << "sum-rule order: " << rep.order << (rep.capped ? " (search capped)" : "") << "\n";
    if (rep.witness)
        std::cout << "bounding witness: (D^" << tuple_str(rep.witness->j) << " a)"
                  << point_str(rep.witness->eps) << " = " << rat2(rep.witness->value) << "\n";
    return 0;
}

int cmd_decompose(const MaskInput& in, int order, bool modified, int slack, bool json) {
    Variant variant = modified ? Variant::modified : Variant::standard;
    auto gens = generator_set(in.mask.dim(), order, variant);
    Decomposition dec = slack < 0 ? decompose_auto(in.mask, order, gens)
                                  : decompose(in.mask, order, gens, slack);
    dec = normalize_affine(std::move(dec));
    auto ver = verify_decomposition(in.mask, dec);
    const auto& norm = *dec.normalized;

    if (json) {
        std::ostringstream os;
        os << "{\"command\": \"decompose\", \"input\": " << jstr(in.source)
           << ", \"origin\": " << jstr(in.origin) << ", \"mask\": " << mask_to_json(in.mask)
           << ", \"result\": {\"order\": " << order << ", \"variant\": "
           << jstr(modified ? "modified" : "standard")
           << ", \"path\": " << jstr(describe_path(in.mask.dim(), order, variant))
           << ", \"generator_count\": " << gens.members.size()
           << ", \"verified\": " << jbool(ver.valid)
           << ", \"lambda_sum\": " << jrat(dec.lambda_sum)
           << ", \"normalization\": " << jstr(dec.normalization_partial ? "partial" : "full")
           << ", \"terms\": [";
        for (std::size_t t = 0; t < dec.terms.size(); ++t) {
            if (t) os << ", ";
            os << "{\"generator\": " << jstr(dec.terms[t].label.to_string())
               << ", \"cofactor\": " << jpoly(dec.terms[t].cofactor)
               << ", \"cofactor_text\": " << jstr(dec.terms[t].cofactor.to_string());
            if (norm[t].raw) {
                os << ", \"raw\": true";
            } else {
                os << ", \"lambda\": " << jrat(norm[t].lambda)
                   << ", \"sigma\": " << jpoly(norm[t].form)
                   << ", \"sigma_text\": " << jstr(norm[t].form.to_string());
            }
            os << "}";
        }
        os << "]}}";
        std::cout << os.str() << "\n";
        return 0;
    }

    std::cout << "command: decompose\n";
    print_mask_header(std::cout, in);
    std::cout << "order: " << order << "\n";
    std::cout << "variant: " << (modified ? "modified" : "standard") << "\n";
    std::cout << "path: " << describe_path(in.mask.dim(), order, variant) << "\n";
    std::cout << "generators: " << gens.members.size() << " in the list, " << dec.terms.size()
              << " with nonzero cofactor\n";
    std::cout << "form: a(z) = sum_t cofactor_t(z) * 2^d * g_t(z)\n";
    for (std::size_t t = 0; t < dec.terms.size(); ++t) {
        std::cout << "term " << t + 1 << ": " << dec.terms[t].label.to_string() << "\n";
        std::cout << "  cofactor: " << dec.terms[t].cofactor.to_string() << "\n";
        if (norm[t].raw) {
            std::cout << "  lambda: 0 (raw term, no sigma form)\n";
        } else {
            std::cout << "  lambda: " << rat2(norm[t].lambda) << "\n";
            std::cout << "  sigma: " << norm[t].form.to_string() << "\n";
        }
    }
    std::cout << "lambda sum: " << rat2(dec.lambda_sum) << "\n";
    std::cout << "normalization: " << (dec.normalization_partial ? "partial" : "full") << "\n";
    std::cout << "verified: " << (ver.valid ? "residual is zero" : "RESIDUAL NONZERO") << "\n";
    return ver.valid ? 0 : 2;
}

int cmd_certify(const MaskInput& in, int max_iter, bool json) {
    auto cert = certify_convergence(in.mask, max_iter);

    if (json) {
        std::ostringstream os;
        os << "{\"command\": \"certify\", \"input\": " << jstr(in.source)
           << ", \"origin\": " << jstr(in.origin) << ", \"mask\": " << mask_to_json(in.mask)
           << ", \"result\": {\"max_iter\": " << max_iter
           << ", \"certified\": " << jbool(cert.certified);
        if (cert.certified) os << ", \"r\": " << cert.r << ", \"norm\": " << jrat(cert.norm);
        os << ", \"best_r\": " << cert.best_r << ", \"best_norm\": " << jrat(cert.best_norm)
           << ", \"norms\": [";
        for (std::size_t i = 0; i < cert.norms.size(); ++i)
            os << (i ? ", " : "") << jrat(cert.norms[i]);
        os << "]}}";
        std::cout << os.str() << "\n";
        return 0;
    }

    std::cout << "command: certify\n";
    print_mask_header(std::cout, in);
    std::cout << "max-iter: " << max_iter << "\n";
    for (std::size_t i = 0; i < cert.norms.size(); ++i)
        std::cout << "norm r=" << i + 1 << ": " << rat2(cert.norms[i]) << "\n";
    if (cert.certified)
        std::cout << "certified: yes at r = " << cert.r << ", norm " << rat2(cert.norm)
                  << " < 1\n";
    else
        std::cout << "certified: no within r <= " << max_iter << "; best norm "
                  << rat2(cert.best_norm) << " at r = " << cert.best_r
                  << " (inconclusive, not a proof of divergence)\n";
    return 0;
}

int cmd_refine(const MaskInput& in, int steps, const std::string& data, bool json) {
    DataGrid d0;
    if (data == "delta") {
        d0 = delta_grid(in.mask.dim());
    } else {
        Mask dm = load_mask_file(data);
        if (dm.dim() != in.mask.dim())
            throw MaskFormatError("data grid dimension " + std::to_string(dm.dim()) +
                                  " does not match mask dimension " +
                                  std::to_string(in.mask.dim()));
        d0.dim = dm.dim();
        d0.values = dm.symbol().terms();
    }
    DataGrid out = subdivide(in.mask, d0, steps);

    if (json) {
        LaurentPoly asym(out.dim);
        for (const auto& [e, v] : out.values) asym.add_term(e, v);
        std::ostringstream os;
        os << "{\"command\": \"refine\", \"input\": " << jstr(in.source)
           << ", \"origin\": " << jstr(in.origin) << ", \"mask\": " << mask_to_json(in.mask)
           << ", \"result\": {\"steps\": " << steps << ", \"data\": " << jstr(data)
           << ", \"level\": " << out.level << ", \"values\": " << jpoly(asym) << "}}";
        std::cout << os.str() << "\n";
        return 0;
    }

    std::cout << "command: refine\n";
    print_mask_header(std::cout, in);
    std::cout << "steps: " << steps << "\n";
    std::cout << "data: " << data << "\n";
    std::cout << "level: " << out.level << " (positions index the grid 2^-" << out.level
              << " Z^d)\n";
    std::cout << "values: " << out.values.size() << " nonzero\n";
    for (const auto& [e, v] : out.values)
        std::cout << tuple_str(e) << ": " << rat2(v) << "\n";
    return 0;
}

int cmd_generators(int dim, int order, bool modified, bool json) {
    Variant variant = modified ? Variant::modified : Variant::standard;
    auto gens = generator_set(dim, order, variant);

    if (json) {
        std::ostringstream os;
        os << "{\"command\": \"generators\", \"result\": {\"dim\": " << dim
           << ", \"order\": " << order << ", \"variant\": "
           << jstr(modified ? "modified" : "standard")
           << ", \"path\": " << jstr(describe_path(dim, order, variant))
           << ", \"members\": [";
        for (std::size_t t = 0; t < gens.members.size(); ++t) {
            if (t) os << ", ";
            os << "{\"label\": " << jstr(gens.members[t].label.to_string())
               << ", \"symbol\": " << jpoly(gens.members[t].symbol)
               << ", \"text\": " << jstr(gens.members[t].symbol.to_string()) << "}";
        }
        os << "]}}";
        std::cout << os.str() << "\n";
        return 0;
    }

    std::cout << "command: generators\n";
    std::cout << "dim: " << dim << "\n";
    std::cout << "order: " << order << "\n";
    std::cout << "variant: " << (modified ? "modified" : "standard") << "\n";
    std::cout << "path: " << describe_path(dim, order, variant) << "\n";
    std::cout << "members: " << gens.members.size() << "\n";
    for (std::size_t t = 0; t < gens.members.size(); ++t)
        std::cout << t + 1 << ": " << gens.members[t].label.to_string() << " = "
                  << gens.members[t].symbol.to_string() << "\n";
    return 0;
}

int cmd_catalog_list(bool json) {
    auto listing = list_schemes();
    if (json) {
        std::ostringstream os;
        os << "{\"command\": \"catalog-list\", \"result\": [";
        for (std::size_t i = 0; i < listing.size(); ++i) {
            if (i) os << ", ";
            os << "{\"name\": " << jstr(listing[i].name)
               << ", \"description\": " << jstr(listing[i].description) << "}";
        }
        os << "]}";
        std::cout << os.str() << "\n";
        return 0;
    }
    for (const auto& s : listing)
        std::cout << std::left << std::setw(16) << s.name << " " << s.description << "\n";
    return 0;
}

void print_mask_table(std::ostream& os, const Mask& m) {
    auto box = m.symbol().support_box();
    if (!box) {
        os << "mask table: empty\n";
        return;
    }
    BigInt denom = 1;
    for (const auto& [e, c] : m.symbol().terms())
        mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), c.get_den().get_mpz_t());

    if (m.dim() > 2) {
        os << "terms (coefficient * " << denom.get_str() << "):\n";
        for (const auto& [e, c] : m.symbol().terms())
            os << "  " << tuple_str(e) << ": " << BigInt(c.get_num() * (denom / c.get_den())).get_str()
               << "\n";
        return;
    }

    const auto& lo = box->first;
    const auto& hi = box->second;
    int jlo = m.dim() == 2 ? lo[1] : 0, jhi = m.dim() == 2 ? hi[1] : 0;
    std::size_t width = 1;
    std::vector<std::vector<std::string>> rows;
    for (int j = jhi; j >= jlo; --j) {
        std::vector<std::string> row;
        for (int i = lo[0]; i <= hi[0]; ++i) {
            Exponents e = m.dim() == 2 ? Exponents{i, j} : Exponents{i};
            Rational c = m.symbol().coeff(e);
            row.push_back(BigInt(c.get_num() * (denom / c.get_den())).get_str());
            width = std::max(width, row.back().size());
        }
        rows.push_back(std::move(row));
    }
    os << "mask table, denominator " << denom.get_str();
    if (m.dim() == 2)
        os << ", rows z2 = " << jhi << " down to " << jlo << ", columns z1 = " << lo[0] << " .. "
           << hi[0];
    else
        os << ", columns z1 = " << lo[0] << " .. " << hi[0];
    os << ":\n";
    for (const auto& row : rows) {
        os << "  [";
        for (std::size_t i = 0; i < row.size(); ++i)
            os << (i ? " " : "") << std::right << std::setw(static_cast<int>(width)) << row[i];
        os << "]\n";
    }
}

int cmd_catalog_show(const std::string& name, bool json) {
    auto entry = get_scheme(name);
    if (json) {
        std::ostringstream os;
        os << "{\"command\": \"catalog-show\", \"result\": {\"name\": " << jstr(entry.name)
           << ", \"description\": " << jstr(entry.description)
           << ", \"provenance\": " << jstr(entry.provenance) << ", \"dim\": " << entry.mask.dim();
        if (entry.known_order) os << ", \"known_order\": " << *entry.known_order;
        if (entry.known_interpolatory)
            os << ", \"known_interpolatory\": " << jbool(*entry.known_interpolatory);
        os << ", \"mask\": " << mask_to_json(entry.mask) << "}}";
        std::cout << os.str() << "\n";
        return 0;
    }
    std::cout << "name: " << entry.name << "\n";
    std::cout << "description: " << entry.description << "\n";
    std::cout << "provenance: " << entry.provenance << "\n";
    std::cout << "dim: " << entry.mask.dim() << "\n";
    if (entry.known_order) std::cout << "known order: " << *entry.known_order << "\n";
    if (entry.known_interpolatory)
        std::cout << "known interpolatory: " << (*entry.known_interpolatory ? "yes" : "no")
                  << "\n";
    print_mask_table(std::cout, entry.mask);
    std::cout << "interchange: " << mask_to_json(entry.mask) << "\n";
    return 0;
}

int cmd_verify(bool json) {
    if (json) {
        auto results = run_acceptance_suite(nullptr);
        std::ostringstream os;
        os << "{\"command\": \"verify-paper\", \"result\": {\"all_passed\": "
           << jbool(all_passed(results)) << ", \"criteria\": [";
        for (std::size_t i = 0; i < results.size(); ++i) {
            if (i) os << ", ";
            os << "{\"index\": " << results[i].index << ", \"title\": " << jstr(results[i].title)
               << ", \"passed\": " << jbool(results[i].passed)
               << ", \"detail\": " << jstr(results[i].detail) << "}";
        }
        os << "]}}";
        std::cout << os.str() << "\n";
        return all_passed(results) ? 0 : 1;
    }
    auto results = run_acceptance_suite(&std::cout);
    int passed = 0;
    for (const auto& r : results)
        if (r.passed) ++passed;
    std::cout << "passed " << passed << " of " << results.size() << "\n";
    return all_passed(results) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact analysis of scalar multivariate subdivision schemes with dilation 2I"};
    app.require_subcommand(1);

    std::string mask_src, data_src = "delta", show_name;
    int order = 1, slack = -1, max_iter = 8, steps = 1, gdim = 2;
    bool modified = false;
    bool j_analyze = false, j_dec = false, j_cert = false, j_ref = false, j_gen = false,
         j_list = false, j_show = false, j_verify = false;

    auto* c_an = app.add_subcommand("analyze", "normalization, interpolation, sum-rule order");
    c_an->add_option("mask", mask_src, "catalog name or mask file")->required();
    c_an->add_flag("--json", j_analyze, "machine-readable output");

    auto* c_de = app.add_subcommand("decompose", "cofactor decomposition over the order-k list");
    c_de->add_option("mask", mask_src, "catalog name or mask file")->required();
    c_de->add_option("--order", order, "zero-condition order k")->required()
        ->check(CLI::PositiveNumber);
    c_de->add_flag("--modified", modified, "use the modified generator family");
    c_de->add_option("--slack", slack, "fixed support-box slack (default: escalate 2..16)")
        ->check(CLI::NonNegativeNumber);
    c_de->add_flag("--json", j_dec, "machine-readable output");

    auto* c_ce = app.add_subcommand("certify", "difference-scheme contraction test");
    c_ce->add_option("mask", mask_src, "catalog name or mask file")->required();
    c_ce->add_option("--max-iter", max_iter, "largest iterate r to test (default 8)")
        ->check(CLI::PositiveNumber);
    c_ce->add_flag("--json", j_cert, "machine-readable output");

    auto* c_re = app.add_subcommand("refine", "apply the subdivision operator to grid data");
    c_re->add_option("mask", mask_src, "catalog name or mask file")->required();
    c_re->add_option("--steps", steps, "number of refinement steps (default 1)")
        ->check(CLI::NonNegativeNumber);
    c_re->add_option("--data", data_src, "initial data: 'delta' or an interchange file");
    c_re->add_flag("--json", j_ref, "machine-readable output");

    auto* c_ge = app.add_subcommand("generators", "list the order-k generator family");
    c_ge->add_option("--dim", gdim, "spatial dimension d (default 2)")->check(CLI::PositiveNumber);
    c_ge->add_option("--order", order, "zero-condition order k")->required()
        ->check(CLI::PositiveNumber);
    c_ge->add_flag("--modified", modified, "use the modified generator family");
    c_ge->add_flag("--json", j_gen, "machine-readable output");

    auto* c_ca = app.add_subcommand("catalog", "built-in scheme library");
    c_ca->require_subcommand(1);
    auto* c_li = c_ca->add_subcommand("list", "names with one-line descriptions");
    c_li->add_flag("--json", j_list, "machine-readable output");
    auto* c_sh = c_ca->add_subcommand("show", "mask table and interchange file");
    c_sh->add_option("name", show_name, "catalog scheme name")->required();
    c_sh->add_flag("--json", j_show, "machine-readable output");

    auto* c_ve = app.add_subcommand("verify-paper", "run the full acceptance identity suite");
    c_ve->add_flag("--json", j_verify, "machine-readable output");

    try {
        app.parse(argc, argv);

        if (c_an->parsed()) return cmd_analyze(resolve_mask(mask_src), j_analyze);
        if (c_de->parsed()) return cmd_decompose(resolve_mask(mask_src), order, modified, slack, j_dec);
        if (c_ce->parsed()) return cmd_certify(resolve_mask(mask_src), max_iter, j_cert);
        if (c_re->parsed()) return cmd_refine(resolve_mask(mask_src), steps, data_src, j_ref);
        if (c_ge->parsed()) return cmd_generators(gdim, order, modified, j_gen);
        if (c_ca->parsed()) {
            if (c_li->parsed()) return cmd_catalog_list(j_list);
            if (c_sh->parsed()) return cmd_catalog_show(show_name, j_show);
        }
        if (c_ve->parsed()) return cmd_verify(j_verify);
        std::cerr << "error: no command\n";
        return 2;
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const SolverIncomplete& e) {
        std::cerr << "solver incomplete: " << e.what() << "\n";
        return 3;
    } catch (const NonzeroRemainder& e) {
        std::cerr << "error: no difference scheme: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
