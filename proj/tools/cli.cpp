#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "aqmds/catalog.hpp"
#include "aqmds/construct.hpp"
#include "aqmds/error.hpp"

namespace aqmds::cli {

namespace {

using catalog::Certificate;
using catalog::Json;

constexpr const char* kElementNote =
    "Field elements are integer indices: the digits of an index in base p are the\n"
    "coefficients (lowest degree first) of the residue polynomial modulo the\n"
    "smallest monic irreducible of degree m. Lists are comma separated.\n"
    "Environment: AQMDS_MAX_ENUM overrides the enumeration cap (default 10^7).\n"
    "Exit codes: 0 ok, 2 usage or invalid input, 3 verification failure.";

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Format { table, json, csv };

Format parse_format(const std::string& s) {
    if (s == "table") return Format::table;
    if (s == "json") return Format::json;
    if (s == "csv") return Format::csv;
    throw UsageError("unknown format " + s);
}

catalog::VerifyLevel parse_level(const std::string& s) {
    auto l = catalog::parse_verify_level(s);
    if (!l) throw UsageError("unknown verify level " + s);
    return *l;
}

std::vector<gf::Element> to_elements(const gf::FiniteField& f, const std::vector<int>& xs) {
    std::vector<gf::Element> out;
    for (int x : xs) out.push_back(f.element(x));
    return out;
}

std::string families_joined(const Certificate& c, char sep) {
    std::string s;
    for (std::size_t i = 0; i < c.families.size(); ++i) {
        if (i) s += sep;
        s += catalog::family_tag(c.families[i]);
    }
    return s;
}

std::string verdict(const Certificate& c) {
    std::string s = c.label();
    s += c.pure ? " pure" : " impure";
    if (c.aqmds) s += " AQMDS";
    return s;
}

void print_table(std::ostream& out, int q, const std::vector<Certificate>& certs) {
    out << "# pure CSS AQMDS codes over GF(" << q << "), assuming the MDS conjecture\n";
    out << std::setw(4) << "n" << std::setw(5) << "j" << std::setw(5) << "dz" << std::setw(5) << "dx"
        << "  verified  families\n";
    for (const auto& c : certs)
        out << std::setw(4) << c.n << std::setw(5) << c.j << std::setw(5) << c.dz << std::setw(5) << c.dx << "  "
            << std::left << std::setw(8) << (c.verified ? "yes" : "no") << std::right << "  " << families_joined(c, ',')
            << '\n';
    out << "# " << certs.size() << " parameter sets\n";
}

void print_csv(std::ostream& out, const std::vector<Certificate>& certs) {
    out << "q,n,j,dz,dx,pure,aqmds,family\n";
    for (const auto& c : certs)
        out << c.q << ',' << c.n << ',' << c.j << ',' << c.dz << ',' << c.dx << ',' << (c.pure ? "true" : "false")
            << ',' << (c.aqmds ? "true" : "false") << ',' << families_joined(c, ';') << '\n';
}

void print_json(std::ostream& out, const std::vector<Certificate>& certs) {
    Json arr = Json::array();
    for (const auto& c : certs) arr.push_back(catalog::to_json(c));
    out << arr.dump(2) << '\n';
}

void write_file(const std::string& path, const Json& j) {
    std::ofstream f(path);
    if (!f) throw UsageError("cannot write " + path);
    f << j.dump(2) << '\n';
}

bool any_failed(const std::vector<std::string>& log) {
    return std::any_of(log.begin(), log.end(), [](const std::string& s) { return s.ends_with(":fail"); });
}

// ---------------------------------------------------------------- construct

struct ConstructArgs {
    std::string kind;
    int q = 0;
    int n = 0;
    int k = 0;
    int r = 0;
    std::vector<int> alpha;
    std::vector<int> v;
};

int cmd_construct(const ConstructArgs& a, std::ostream& out) {
    const gf::FieldPtr field = gf::make_field(a.q);
    const gf::FiniteField& f = *field;
    std::optional<code::LinearCode> c;
    std::optional<gf::Poly> irreducible;

    auto points = [&](auto& spec) {
        if (!a.alpha.empty()) spec.alpha = to_elements(f, a.alpha);
        if (!a.v.empty()) spec.v = to_elements(f, a.v);
    };
    if (a.kind == "grs") {
        auto spec = construct::GrsSpec::with_defaults(field, a.n, a.k);
        points(spec);
        c = construct::grs(spec);
    } else if (a.kind == "extended-grs") {
        auto spec = construct::ExtendedGrsSpec::with_defaults(field, a.k);
        points(spec);
        c = construct::extended_grs(spec);
    } else if (a.kind == "grs-subcode") {
        auto spec = construct::ExtendedGrsSpec::with_defaults(field, a.k);
        points(spec);
        auto sub = construct::grs_subcode_irreducible(spec, a.r);
        c = sub.code;
        irreducible = sub.irreducible;
    } else if (a.kind == "qplus2-high" || a.kind == "qplus2-low") {
        auto spec = construct::QPlus2Spec::with_defaults(field);
        points(spec);
        c = a.kind == "qplus2-high" ? construct::q_plus_2_high(spec) : construct::q_plus_2_low(spec);
    } else {
        throw UsageError("unknown code kind " + a.kind);
    }

    const int d = code::min_distance(*c, {code::default_enumeration_cap(), code::DistanceMethod::automatic});
    out << '[' << c->n() << ',' << c->k() << ',' << d << "]_" << a.q << " MDS=" << (code::is_mds(*c) ? "true" : "false")
        << '\n';
    if (irreducible) {
        out << "irreducible:";
        for (gf::Element e : *irreducible) out << ' ' << e.value();
        out << '\n';
    }
    out << "generator:\n" << linalg::to_string(c->generator());
    return kOk;
}

// ---------------------------------------------------------------- css

struct CssArgs {
    std::string family;
    int q = 0;
    int n = 0;
    int k = 0;
    int j = 0;
    std::vector<int> alpha;
    std::vector<int> v;
    std::string emit;
};

int cmd_css(const CssArgs& a, std::ostream& out, std::ostream& err) {
    const auto fam = catalog::parse_family(a.family);
    if (!fam) throw UsageError("unknown family " + a.family);
    catalog::Recipe recipe = catalog::default_recipe(*fam, a.q, a.n, a.k, a.j);
    if (recipe.source) {
        recipe.source->alpha = a.alpha;
        recipe.source->v = a.v;
    } else {
        recipe.alpha = a.alpha;
        recipe.v = a.v;
    }
    if (*fam == catalog::Family::th12) {
        // Pin u (the normalized generator of <u>) in the emitted recipe.
        const css::NestedPair pair = catalog::build_pair(recipe);
        const auto& g = pair.c1_dual().generator();
        recipe.codeword.emplace();
        for (std::size_t i = 0; i < g.cols(); ++i) recipe.codeword->push_back(g(0, i).value());
    }

    const catalog::ClosedForm cf = catalog::closed_form(recipe);
    Certificate cert;
    cert.q = a.q;
    cert.n = cf.n;
    cert.j = cf.j;
    cert.dz = cf.dz;
    cert.dx = cf.dx;
    cert.pure = true;
    cert.aqmds = true;
    cert.families = {*fam};
    cert.recipe = recipe;
    const catalog::ReplayOutcome r = catalog::replay(cert);
    if (!a.emit.empty()) write_file(a.emit, catalog::to_json(r.certificate));
    if (r.first_failure) {
        err << "verification failed: " << *r.first_failure << '\n';
        return kVerificationFailed;
    }
    out << verdict(r.certificate) << '\n';
    if (r.certificate.diff_weights)
        out << "wt(C2\\C1^perp)=" << r.certificate.diff_weights->first
            << " wt(C1\\C2^perp)=" << r.certificate.diff_weights->second << '\n';
    if (!r.certificate.verified) out << "note: some oracles were skipped (enumeration cap)\n";
    return kOk;
}

// ---------------------------------------------------------------- enumerate / exists / verify

struct QueryArgs {
    int q = 0;
    int n = -1;
    int j = -1;
    int dz = -1;
    int dx = -1;
    int min_dx = -1;
    std::string format = "table";
    std::string level;
};

std::optional<int> opt(int x) { return x >= 0 ? std::optional<int>(x) : std::nullopt; }

int cmd_enumerate(const QueryArgs& a, std::ostream& out) {
    catalog::CatalogQuery query;
    query.q = a.q;
    query.n = opt(a.n);
    query.j = opt(a.j);
    query.dz = opt(a.dz);
    query.dx = opt(a.dx);
    query.min_dx = opt(a.min_dx);
    query.level = a.level.empty() ? catalog::VerifyLevel::closed_form : parse_level(a.level);
    const Format format = parse_format(a.format);
    const std::vector<Certificate> certs = catalog::enumerate(query);
    switch (format) {
        case Format::table:
            print_table(out, a.q, certs);
            break;
        case Format::csv:
            print_csv(out, certs);
            break;
        case Format::json:
            print_json(out, certs);
            break;
    }
    for (const auto& c : certs)
        if (any_failed(c.oracle_log)) return kVerificationFailed;
    return kOk;
}

int cmd_exists(const QueryArgs& a, std::ostream& out) {
    if (a.n < 0 || a.j < 0 || a.dz < 0 || a.dx < 0) throw UsageError("exists needs --n, --j, --dz and --dx");
    const Format format = parse_format(a.format);
    const auto level = a.level.empty() ? catalog::VerifyLevel::full_oracle : parse_level(a.level);
    const catalog::ExistsResult r = catalog::exists(a.q, a.n, a.j, a.dz, a.dx, level);
    if (format == Format::json) {
        Json j;
        j["exists"] = r.exists;
        if (r.exists) j["certificate"] = catalog::to_json(*r.certificate);
        else j["reason"] = r.reason;
        out << j.dump(2) << '\n';
    } else if (format == Format::csv) {
        if (r.exists) print_csv(out, {*r.certificate});
        else out << "q,n,j,dz,dx,pure,aqmds,family\n";
    } else if (r.exists) {
        out << "yes " << verdict(*r.certificate) << " via " << families_joined(*r.certificate, ',')
            << (r.certificate->verified ? " (verified)" : "") << '\n';
    } else {
        out << "no (" << r.reason << ")\n";
    }
    if (r.certificate && any_failed(r.certificate->oracle_log)) return kVerificationFailed;
    return kOk;
}

int cmd_verify(const std::string& path, const std::string& emit, std::ostream& out, std::ostream& err) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read " + path);
    Json doc;
    try {
        doc = Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw UsageError(std::string("malformed JSON: ") + e.what());
    }
    std::vector<Certificate> certs;
    if (doc.is_array())
        for (const auto& j : doc) certs.push_back(catalog::certificate_from_json(j));
    else
        certs.push_back(catalog::certificate_from_json(doc));

    int status = kOk;
    Json refreshed = Json::array();
    for (const auto& c : certs) {
        const catalog::ReplayOutcome r = catalog::replay(c);
        refreshed.push_back(catalog::to_json(r.certificate));
        if (r.first_failure) {
            err << c.label() << " failed: " << *r.first_failure << '\n';
            status = kVerificationFailed;
        } else if (!r.certificate.verified) {
            err << c.label() << " incomplete: oracles skipped\n";
            status = kVerificationFailed;
        } else {
            out << c.label() << " verified\n";
        }
    }
    if (!emit.empty()) write_file(emit, doc.is_array() ? refreshed : refreshed.front());
    return status;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Pure CSS asymmetric quantum MDS codes: constructions, oracles and catalog", "aqmds"};
    app.footer(kElementNote);
    app.require_subcommand(1);

    ConstructArgs ca;
    auto* construct_cmd = app.add_subcommand("construct", "Build a classical MDS code and check it");
    construct_cmd->add_option("kind", ca.kind, "grs | extended-grs | grs-subcode | qplus2-high | qplus2-low")
        ->required()
        ->check(CLI::IsMember({"grs", "extended-grs", "grs-subcode", "qplus2-high", "qplus2-low"}));
    construct_cmd->add_option("--q", ca.q, "Field order")->required();
    construct_cmd->add_option("--n", ca.n, "Length (grs)");
    construct_cmd->add_option("--k", ca.k, "Dimension");
    construct_cmd->add_option("--r", ca.r, "Subcode dimension (grs-subcode)");
    construct_cmd->add_option("--alpha", ca.alpha, "Evaluation points")->delimiter(',');
    construct_cmd->add_option("--v", ca.v, "Column multipliers")->delimiter(',');

    CssArgs sa;
    auto* css_cmd = app.add_subcommand("css", "Run the CSS construction for one family");
    css_cmd->add_option("--family", sa.family, "th7 | th8 | th11 | th12 | prop5 | prop6 | cor10")->required();
    css_cmd->add_option("--q", sa.q, "Field order")->required();
    css_cmd->add_option("--n", sa.n, "Length (th7, prop5, prop6, th12)");
    css_cmd->add_option("--k", sa.k, "Dimension parameter");
    css_cmd->add_option("--j", sa.j, "Quantum dimension (th7, th8)");
    css_cmd->add_option("--alpha", sa.alpha, "Evaluation points")->delimiter(',');
    css_cmd->add_option("--v", sa.v, "Column multipliers")->delimiter(',');
    css_cmd->add_option("--emit-cert", sa.emit, "Write the certificate to FILE");

    QueryArgs ea;
    auto* enum_cmd = app.add_subcommand("enumerate", "List every admissible [[n,j,dz/dx]]_q");
    enum_cmd->add_option("--q", ea.q, "Field order")->required();
    enum_cmd->add_option("--n", ea.n, "Filter on length");
    enum_cmd->add_option("--j", ea.j, "Filter on quantum dimension");
    enum_cmd->add_option("--dz", ea.dz, "Filter on a distance (either orientation)");
    enum_cmd->add_option("--dx", ea.dx, "Filter on a distance (either orientation)");
    enum_cmd->add_option("--min-dx", ea.min_dx, "Lower bound on dx");
    enum_cmd->add_option("--format", ea.format, "table | json | csv");
    enum_cmd->add_option("--verify-level", ea.level, "closed_form (default) | full_oracle");

    QueryArgs xa;
    auto* exists_cmd = app.add_subcommand("exists", "Decide one parameter set");
    exists_cmd->add_option("--q", xa.q, "Field order")->required();
    exists_cmd->add_option("--n", xa.n, "Length")->required();
    exists_cmd->add_option("--j", xa.j, "Quantum dimension")->required();
    exists_cmd->add_option("--dz", xa.dz, "Distance")->required();
    exists_cmd->add_option("--dx", xa.dx, "Distance")->required();
    exists_cmd->add_option("--format", xa.format, "table | json | csv");
    exists_cmd->add_option("--verify-level", xa.level, "closed_form | full_oracle (default)");

    std::string verify_path;
    std::string verify_emit;
    auto* verify_cmd = app.add_subcommand("verify", "Replay every oracle on certificate files");
    verify_cmd->add_option("file", verify_path, "Certificate or array of certificates (JSON)")->required();
    verify_cmd->add_option("--emit", verify_emit, "Write refreshed certificates to FILE");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    try {
        if (construct_cmd->parsed()) return cmd_construct(ca, out);
        if (css_cmd->parsed()) return cmd_css(sa, out, err);
        if (enum_cmd->parsed()) return cmd_enumerate(ea, out);
        if (exists_cmd->parsed()) return cmd_exists(xa, out);
        if (verify_cmd->parsed()) return cmd_verify(verify_path, verify_emit, out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const Error& e) {
        if (e.kind() == Errc::verification_failed) {
            err << "verification failed: " << e.what() << '\n';
            return kVerificationFailed;
        }
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace aqmds::cli
