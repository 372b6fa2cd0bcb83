#include "commands.hpp"

#include "qunip/errors.hpp"

#include "CLI11.hpp"

#include <iostream>

using namespace qunip;
using namespace qunip::cli;

namespace {

enum ExitCode { Ok = 0, Usage = 2, Invalid = 3, Bound = 4, Internal = 5 };

void common_options(CLI::App* sub, RunConfig& cfg)
{
    sub->add_option("--type", cfg.type, "root datum preset (A1, A2, A3, B2, G2, A1~)");
    sub->add_option("--datum-file", cfg.datum_file, "root datum JSON file");
    sub->add_option("--word", cfg.word, "reduced word, 1-based letters, e.g. 1,2,1");
    sub->add_option("--sign", cfg.sign, "sign e (+1 or -1)");
    sub->add_option("--height", cfg.height, "height bound of the word spaces");
    sub->add_option("--degree", cfg.degree, "degree bound of report checks");
    sub->add_option("--format", cfg.format, "json or table");
    sub->add_option("--cache", cfg.cache_dir, "output cache directory");
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Dual canonical bases and quantum unipotent minors"};
    app.require_subcommand(1);
    RunConfig cfg;
    std::function<json()> run;
    std::string request;

    int k = 0, j = 0, cj = 0, ck = 0;
    std::string c, c1, c2, ops;
    MinorsFlags mflags;

    auto add = [&](const char* name, const char* help) {
        auto* sub = app.add_subcommand(name, help);
        common_options(sub, cfg);
        return sub;
    };
    auto* gram = add("gram", "Gram ranks and PBW counts per weight");
    auto* rootvec = add("rootvec", "root vector F(beta_k)");
    rootvec->add_option("--k", k, "1-based position")->required();
    auto* pbw = add("pbw", "PBW monomial F(c)");
    pbw->add_option("--c", c, "Lusztig datum")->required();
    auto* dcb = add("dcb", "dual canonical element B^up(c)");
    dcb->add_option("--c", c, "Lusztig datum")->required();
    auto* straighten = add("straighten", "F(c_k beta_k) F(c_j beta_j) - q^-(..) F(c_j beta_j) F(c_k beta_k) on the PBW basis");
    straighten->add_option("--j", j, "1-based position j < k")->required();
    straighten->add_option("--k", k, "1-based position k")->required();
    straighten->add_option("--cj", cj, "power of F(beta_j)")->default_val(1);
    straighten->add_option("--ck", ck, "power of F(beta_k)")->default_val(1);
    auto* product = add("product", "B^up(c1) B^up(c2) on the dual canonical basis");
    product->add_option("--c1", c1, "left Lusztig datum")->required();
    product->add_option("--c2", c2, "right Lusztig datum")->required();
    auto* compat = add("compat", "whether B^up(c1) B^up(c2) is a single element up to q");
    compat->add_option("--c1", c1, "left Lusztig datum")->required();
    compat->add_option("--c2", c2, "right Lusztig datum")->required();
    auto* minors = add("minors", "flag minor report");
    minors->add_flag("--check-qcommute", mflags.check_qcommute, "verify the q-commutation matrix against products");
    minors->add_flag("--check-factor", mflags.check_factor, "verify interval-free factorization up to --degree");
    auto* seed = add("seed", "initial seed record");
    auto* crystal = add("crystal", "apply crystal operators to b(c)");
    crystal->add_option("--c", c, "Lusztig datum")->required();
    crystal->add_option("--ops", ops, "e.g. f1,f2,e1*")->default_val("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? Ok : Usage;
    }

    auto* sub = app.get_subcommands().front();
    request = sub->get_name();
    for (const auto* opt : sub->get_options())
        if (opt->count() > 0)
            request += " " + opt->get_name() + "=" + opt->as<std::string>();
    if (sub == gram)
        run = [&] { return cmd_gram(cfg); };
    else if (sub == rootvec)
        run = [&] { return cmd_rootvec(cfg, k); };
    else if (sub == pbw)
        run = [&] { return cmd_pbw(cfg, c); };
    else if (sub == dcb)
        run = [&] { return cmd_dcb(cfg, c); };
    else if (sub == straighten)
        run = [&] { return cmd_straighten(cfg, j, k, cj, ck); };
    else if (sub == product)
        run = [&] { return cmd_product(cfg, c1, c2); };
    else if (sub == compat)
        run = [&] { return cmd_compat(cfg, c1, c2); };
    else if (sub == minors)
        run = [&] { return cmd_minors(cfg, mflags); };
    else if (sub == seed)
        run = [&] { return cmd_seed(cfg); };
    else
        run = [&] { return cmd_crystal(cfg, c, ops); };

    try {
        validate(cfg);
        OutputCache cache(cfg.cache_dir);
        // The datum enters the key by its full definition, not only its name.
        if (cache.enabled())
            request += " datum=" + load_datum(cfg).fingerprint();
        std::optional<json> doc = cache.enabled() ? cache.load(request) : std::nullopt;
        if (!doc) {
            doc = run();
            if (cache.enabled())
                cache.store(request, *doc);
        }
        std::cout << render(*doc, cfg.format);
        return Ok;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return Invalid;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return Invalid;
    } catch (const BoundExceeded& e) {
        std::cerr << "bound exceeded: " << e.what() << '\n';
        return Bound;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return Internal;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return Internal;
    }
}
