/*
   Copyright 2026 The perpetuants authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "cli.hpp"

#include <CLI11.hpp>

#include <perpetuants/basis.hpp>
#include <perpetuants/binforms.hpp>
#include <perpetuants/errors.hpp>
#include <perpetuants/perpetua.hpp>
#include <perpetuants/serialize.hpp>
#include <perpetuants/symfunc.hpp>

#include <algorithm>
#include <future>
#include <optional>
#include <sstream>

namespace perpetuants::cli
{

namespace
{

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Format { Text, Json };

struct Options {
    std::string format = "text";
    bool primitive = false;
    std::size_t n = 0;
    std::optional<unsigned> g;
    std::optional<unsigned> gmax;
    unsigned jobs = 1;

    Format fmt() const
    {
        return format == "json" ? Format::Json : Format::Text;
    }
};

std::string index_text(const std::vector<unsigned> &k)
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < k.size(); ++i) {
        os << (i ? "," : "") << k[i];
    }
    os << ')';
    return os.str();
}

void print_elements(std::ostream &out, const std::vector<InvariantElement> &els, const Options &o,
                    const std::string &label)
{
    if (o.fmt() == Format::Json) {
        Json arr = Json::array();
        for (const auto &el : els) {
            InvariantElement shown = el;
            if (o.primitive) {
                shown.value = shown.value.primitive_part();
            }
            arr.push_back(to_json(shown));
        }
        out << arr.dump() << '\n';
        return;
    }
    out << "# " << label << "_{" << o.n << ',' << *o.g << "}: " << els.size() << " element(s)\n";
    for (const auto &el : els) {
        const Poly v = o.primitive ? el.value.primitive_part() : el.value;
        out << "U" << index_text(el.k) << " = " << v.to_string() << '\n';
    }
}

void require_n(std::size_t n, std::size_t min, const char *what)
{
    if (n < min) {
        throw UsageError(std::string(what) + " requires n >= " + std::to_string(min));
    }
}

int cmd_basis(const Options &o, std::ostream &out)
{
    require_n(o.n, 1, "basis");
    print_elements(out, u_basis(o.n, *o.g), o, "S");
    return exit_ok;
}

int cmd_perpetuants(const Options &o, std::ostream &out)
{
    if (o.n < 3) {
        throw UsageError("perpetuants requires n >= 3; for n = 1 the only perpetuant is a0 (weight 0), "
                         "for n = 2 there is exactly one perpetuant in every even weight g >= 2 "
                         "(2*a0*a_g - 2*a1*a_{g-1} + ... +/- a_{g/2}^2)");
    }
    print_elements(out, perpetuant_basis(o.n, *o.g), o, "P");
    return exit_ok;
}

int print_series(const DimensionSeries &s, unsigned g_min, const Options &o, std::ostream &out)
{
    if (o.fmt() == Format::Json) {
        out << to_json(s, g_min).dump() << '\n';
        return exit_ok;
    }
    out << "g\tcount\n";
    for (unsigned g = g_min; g < s.coefficients.size(); ++g) {
        out << g << '\t' << s.coefficients[g].get_str() << '\n';
    }
    return exit_ok;
}

int cmd_dims(const Options &o, std::ostream &out)
{
    require_n(o.n, 1, "dims");
    return print_series(dim_series(o.n, *o.gmax), 0, o, out);
}

int cmd_stroh(const Options &o, std::ostream &out)
{
    require_n(o.n, 1, "stroh");
    unsigned g_min = 0;
    if (o.n >= 3) {
        g_min = std::min(threshold(o.n).weight(), *o.gmax + 1);
    }
    return print_series(stroh_series(o.n, *o.gmax), g_min, o, out);
}

std::string certificate_text(const ComplementCertificate &c)
{
    std::ostringstream os;
    os << "n=" << c.n << " g=" << c.g << " dim_total=" << c.dim_total << " dim_dec=" << c.dim_decomposable
       << " dim_perp=" << c.dim_perpetuant << " stroh=" << c.stroh_coefficient.get_str() << ' '
       << (c.ok() ? "ok" : "FAILED");
    return os.str();
}

int cmd_verify(const Options &o, std::ostream &out)
{
    require_n(o.n, 3, "verify");
    if (o.g.has_value() == o.gmax.has_value()) {
        throw UsageError("verify takes either a weight g or --gmax G");
    }
    if (o.g) {
        const auto c = verify_complement(o.n, *o.g);
        out << (o.fmt() == Format::Json ? to_json(c).dump() : certificate_text(c)) << '\n';
        return c.ok() ? exit_ok : exit_certificate_failed;
    }
    // Cells are computed in batches of `jobs` and printed in ascending g.
    bool all_ok = true;
    const unsigned jobs = std::max(1u, o.jobs);
    for (unsigned start = 0; start <= *o.gmax; start += jobs) {
        std::vector<std::future<ComplementCertificate>> batch;
        for (unsigned g = start; g <= *o.gmax && g < start + jobs; ++g) {
            batch.push_back(std::async(jobs > 1 ? std::launch::async : std::launch::deferred,
                                       [n = o.n, g] { return verify_complement(n, g); }));
        }
        for (auto &f : batch) {
            const auto c = f.get();
            all_ok = all_ok && c.ok();
            out << (o.fmt() == Format::Json ? to_json(c).dump() : certificate_text(c)) << '\n';
        }
    }
    return all_ok ? exit_ok : exit_certificate_failed;
}

int cmd_qn(const Options &o, std::ostream &out)
{
    require_n(o.n, 3, "qn");
    const Poly q = q_n(o.n);
    const auto lead = leading_monomial(q);
    const auto exps = lambda_exponents(lead.exponent, o.n - 1);
    if (o.fmt() == Format::Json) {
        out << Json{{"n", o.n},
                    {"degree", q.total_degree()},
                    {"leading_exponent", exps},
                    {"leading_coefficient", rational_to_string(lead.coefficient)},
                    {"poly", to_json(q)}}
                   .dump()
            << '\n';
        return exit_ok;
    }
    out << "q_" << o.n << " (degree " << q.total_degree() << ", " << q.size() << " terms)\n";
    out << "leading exponent: (";
    for (std::size_t i = 0; i < exps.size(); ++i) {
        out << (i ? "," : "") << exps[i];
    }
    out << ")\n";
    out << q.to_string() << '\n';
    return exit_ok;
}

int cmd_relations(const Options &o, std::ostream &out)
{
    const auto checks = relation_checks();
    bool all = true;
    Json arr = Json::array();
    for (const auto &c : checks) {
        all = all && c.pass;
        if (o.fmt() == Format::Json) {
            Json polys = Json::object();
            for (const auto &[name, p] : c.polys) {
                polys[name] = p.to_string();
            }
            arr.push_back(Json{{"relation", c.name}, {"pass", c.pass}, {"polys", std::move(polys)}});
            continue;
        }
        out << (c.pass ? "PASS " : "FAIL ") << c.name << '\n';
        for (const auto &[name, p] : c.polys) {
            out << "    " << name << " = " << p.to_string() << '\n';
        }
    }
    if (o.fmt() == Format::Json) {
        out << arr.dump() << '\n';
    }
    return all ? exit_ok : exit_certificate_failed;
}

int cmd_oracle(const Options &o, std::ostream &out)
{
    require_n(o.n, 1, "oracle");
    const auto kernel = kernel_oracle(o.n, *o.g);
    const auto basis = values(u_basis(o.n, *o.g));
    const auto report = span_equal(basis, kernel);
    if (o.fmt() == Format::Json) {
        Json arr = Json::array();
        for (const auto &p : kernel) {
            arr.push_back(to_json(p));
        }
        out << Json{{"n", o.n},
                    {"g", *o.g},
                    {"kernel", std::move(arr)},
                    {"rank_basis", report.rank_a},
                    {"rank_kernel", report.rank_b},
                    {"rank_union", report.rank_union},
                    {"span_equal", report.equal}}
                   .dump()
            << '\n';
    } else {
        out << "# ker D on degree " << o.n << ", weight " << *o.g << ": dimension " << kernel.size() << '\n';
        for (const auto &p : kernel) {
            out << p.to_string() << '\n';
        }
        out << "span_equal(u_basis, kernel) = " << (report.equal ? "true" : "false") << " (ranks "
            << report.rank_a << ", " << report.rank_b << ", union " << report.rank_union << ")\n";
    }
    return report.equal ? exit_ok : exit_certificate_failed;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"U-invariants and perpetuants of binary forms, in exact arithmetic"};
    app.require_subcommand(1);
    Options o;

    auto add_format = [&](CLI::App *sub) {
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    };

    auto *basis = app.add_subcommand("basis", "Basis U_k of the U-invariants of degree n and weight g");
    auto *perp = app.add_subcommand("perpetuants", "Perpetuant basis of degree n and weight g (n >= 3)");
    auto *oracle = app.add_subcommand("oracle", "Kernel of D by brute force, compared with the basis");
    for (auto *sub : {basis, perp, oracle}) {
        sub->add_option("n", o.n, "Degree")->required();
        sub->add_option("g", o.g, "Weight")->required();
        add_format(sub);
    }
    for (auto *sub : {basis, perp}) {
        sub->add_flag("--primitive", o.primitive, "Divide each element by the gcd of its coefficients");
    }

    auto *dims = app.add_subcommand("dims", "Dimensions N_{n,g} of the U-invariants for g = 0..G");
    auto *stroh = app.add_subcommand("stroh", "Number of perpetuants of degree n by weight, up to G");
    for (auto *sub : {dims, stroh}) {
        sub->add_option("n", o.n, "Degree")->required();
        sub->add_option("--gmax", o.gmax, "Largest weight")->required();
        add_format(sub);
    }

    auto *verify = app.add_subcommand("verify", "Certify the perpetuant basis as a complement of the decomposables");
    verify->add_option("n", o.n, "Degree")->required();
    verify->add_option("g", o.g, "Weight");
    verify->add_option("--gmax", o.gmax, "Certify every weight 0..G");
    verify->add_option("--jobs", o.jobs, "Worker threads for --gmax")->check(CLI::Range(1u, 256u));
    add_format(verify);

    auto *qn = app.add_subcommand("qn", "The symmetric function q_n and its leading exponent");
    qn->add_option("n", o.n, "Number of lambda variables (n >= 3)")->required();
    add_format(qn);

    auto *relations = app.add_subcommand("relations", "Classical relations among c2, c3, c4, D, B, C");
    add_format(relations);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }

    try {
        if (*basis) {
            return cmd_basis(o, out);
        }
        if (*perp) {
            return cmd_perpetuants(o, out);
        }
        if (*oracle) {
            return cmd_oracle(o, out);
        }
        if (*dims) {
            return cmd_dims(o, out);
        }
        if (*stroh) {
            return cmd_stroh(o, out);
        }
        if (*verify) {
            return cmd_verify(o, out);
        }
        if (*qn) {
            return cmd_qn(o, out);
        }
        if (*relations) {
            return cmd_relations(o, out);
        }
    } catch (const UsageError &e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const DomainError &e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}

} // namespace perpetuants::cli
