#include "commands.hpp"

#include "qunip/crystal.hpp"
#include "qunip/errors.hpp"

#include <functional>

namespace qunip::cli {

namespace {

// The engines share one datum; the word is validated before any computation.
struct Session {
    RootDatum datum;
    ReducedWord word;
    Algebra alg;
    BraidEngine braid;
    DualCanonical dc;

    explicit Session(const RunConfig& cfg)
        : datum(load_datum(cfg)), word(load_word(datum, cfg)), alg(datum, cfg.height), braid(alg), dc(braid)
    {
    }
};

LusztigDatum datum_arg(const Session& s, const std::string& text)
{
    LusztigDatum c = parse_list(text);
    if (c.size() != s.word.size())
        throw ValidationError("Lusztig datum has the wrong length");
    for (int x : c)
        if (x < 0)
            throw ValidationError("Lusztig data must be non-negative");
    return c;
}

// Contents of height h, in decreasing lex order.
void contents_of_height(int rank, int h, std::vector<std::vector<int>>& out)
{
    std::vector<int> c(static_cast<std::size_t>(rank), 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == rank - 1) {
            c[static_cast<std::size_t>(i)] = left;
            out.push_back(c);
            return;
        }
        for (int v = left; v >= 0; --v) {
            c[static_cast<std::size_t>(i)] = v;
            rec(i + 1, left - v);
        }
    };
    rec(0, h);
}

std::vector<LusztigDatum> data_up_to(std::size_t l, int bound)
{
    std::vector<LusztigDatum> out;
    LusztigDatum c(l, 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t k, int left) {
        if (k == l) {
            out.push_back(c);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            c[k] = v;
            rec(k + 1, left - v);
        }
        c[k] = 0;
    };
    rec(0, bound);
    return out;
}

} // namespace

json cmd_gram(const RunConfig& cfg)
{
    Session s(cfg);
    std::optional<ReducedWord> w0;
    if (s.datum.is_finite_type())
        w0.emplace(s.datum, extend_to_longest(s.datum, {}));
    json weights = json::array();
    for (int h = 0; h <= cfg.height; ++h) {
        std::vector<std::vector<int>> contents;
        contents_of_height(s.datum.rank(), h, contents);
        for (const auto& content : contents) {
            auto wb = s.alg.weight_basis(content);
            json entry{{"content", content}, {"dimension", wb->pivots.size()}};
            if (w0)
                entry["pbw_count"] = lusztig_data(*w0, RootVec(content)).size();
            weights.push_back(entry);
        }
    }
    return {{"datum", s.datum.name()}, {"height", cfg.height}, {"weights", weights}};
}

json cmd_rootvec(const RunConfig& cfg, int k)
{
    Session s(cfg);
    if (k < 1 || k > static_cast<int>(s.word.size()))
        throw ValidationError("root vector index out of range");
    json out = wordelt_json(s.braid.root_vector(s.word, k, cfg.sign));
    out["context"] = context_json(s.datum, s.word, cfg.sign);
    return out;
}

json cmd_pbw(const RunConfig& cfg, const std::string& c)
{
    Session s(cfg);
    json out = wordelt_json(s.braid.pbw_monomial(s.word, datum_arg(s, c), cfg.sign));
    out["context"] = context_json(s.datum, s.word, cfg.sign);
    return out;
}

json cmd_dcb(const RunConfig& cfg, const std::string& c)
{
    Session s(cfg);
    auto b = s.dc.dual_canonical(s.word, datum_arg(s, c), cfg.sign);
    json out = pbwvector_json(s.datum, b.pbw);
    out["upper"] = expansion_json(b.upper);
    return out;
}

json cmd_straighten(const RunConfig& cfg, int j, int k, int cj, int ck)
{
    Session s(cfg);
    return pbwvector_json(s.datum, s.dc.straighten(s.word, j, k, cj, ck, cfg.sign));
}

json cmd_product(const RunConfig& cfg, const std::string& c1, const std::string& c2)
{
    Session s(cfg);
    auto b1 = s.dc.dual_canonical(s.word, datum_arg(s, c1), cfg.sign);
    auto b2 = s.dc.dual_canonical(s.word, datum_arg(s, c2), cfg.sign);
    return {{"context", context_json(s.datum, s.word, cfg.sign)}, {"terms", expansion_json(s.dc.expand_product(b1, b2))}};
}

json cmd_compat(const RunConfig& cfg, const std::string& c1, const std::string& c2)
{
    Session s(cfg);
    auto b1 = s.dc.dual_canonical(s.word, datum_arg(s, c1), cfg.sign);
    auto b2 = s.dc.dual_canonical(s.word, datum_arg(s, c2), cfg.sign);
    auto single = DualCanonical::single_term(s.dc.expand_product(b1, b2));
    json out{{"context", context_json(s.datum, s.word, cfg.sign)}, {"compatible", single.has_value()}};
    if (single) {
        out["c"] = single->first;
        out["exponent"] = single->second;
    }
    return out;
}

json cmd_minors(const RunConfig& cfg, const MinorsFlags& flags)
{
    Session s(cfg);
    Minors mi(s.dc);
    bool pass = true;
    json out{{"context", context_json(s.datum, s.word, -1)}};

    auto report = mi.check_strong_compatibility(s.word, cfg.degree);
    pass = pass && report.ok();
    out["strong_compatibility"] = {{"degree", cfg.degree}, {"checked", report.checked}, {"failures", report.failures}};

    if (flags.check_qcommute) {
        // qcommute_exponent raises when the measured exponent differs from N_w(n_j, n_k).
        out["qcommute"] = {{"lambda_matrix", mi.lambda_matrix(s.word)}, {"agrees_with_nform", true}};
    }
    if (flags.check_factor) {
        std::size_t checked = 0;
        json failures = json::array();
        for (const auto& c : data_up_to(s.word.size(), cfg.degree)) {
            ++checked;
            if (!mi.factorization_exponent(s.word, c))
                failures.push_back(c);
        }
        pass = pass && failures.empty();
        out["factorization"] = {{"bound", cfg.degree}, {"checked", checked}, {"failures", failures}};
    }
    out["pass"] = pass;
    return out;
}

json cmd_seed(const RunConfig& cfg)
{
    Session s(cfg);
    Minors mi(s.dc);
    return seed_json(mi.export_seed(s.word));
}

json cmd_crystal(const RunConfig& cfg, const std::string& c, const std::string& ops)
{
    Session s(cfg);
    CrystalEngine cr(s.dc);
    std::optional<CrystalElt> b = cr.element(s.word, datum_arg(s, c), cfg.sign);
    std::stringstream ss(ops);
    std::string op;
    while (b && std::getline(ss, op, ',')) {
        bool star = !op.empty() && op.back() == '*';
        if (star)
            op.pop_back();
        if (op.size() < 2 || (op[0] != 'e' && op[0] != 'f'))
            throw ValidationError("crystal operators are e<i>, f<i>, e<i>*, f<i>*");
        int i = parse_list(op.substr(1)).at(0) - 1;
        if (i < 0 || i >= s.datum.rank())
            throw ValidationError("crystal operator index out of range");
        if (op[0] == 'e')
            b = star ? cr.etilde_star(i, *b) : cr.etilde(i, *b);
        else
            b = star ? cr.ftilde_star(i, *b) : cr.ftilde(i, *b);
    }
    json out{{"ops", ops}};
    if (!b) {
        out["element"] = nullptr;
        return out;
    }
    json eps = json::array();
    for (int i = 0; i < s.datum.rank(); ++i)
        eps.push_back(cr.eps(i, *b));
    out["element"] = {{"word", letters_json(b->word.letters())},
                      {"sign", b->e},
                      {"c", b->c},
                      {"weight", cr.wt(*b).c},
                      {"eps", eps},
                      {"string", cr.string_data(b->word, *b)}};
    return out;
}

} // namespace qunip::cli
