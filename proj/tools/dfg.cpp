// dfg: command line front end for the insertion, growth, graph and identity
// code. Exit codes: 0 ok, 1 verification failure, 2 usage error, 3 rule
// conflict.

#include <cctype>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "render.hpp"

namespace {

using namespace dfg;
using render::json;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;
constexpr int kConflict = 3;
constexpr int kRankCap = 14;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Digits, or comma separated integers when a letter exceeds 9.
Word parse_word(const std::string& s)
{
    Word w;
    if (s.find(',') != std::string::npos) {
        std::stringstream ss(s);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            if (tok.empty() || !std::all_of(tok.begin(), tok.end(), ::isdigit))
                throw UsageError("bad letter '" + tok + "'");
            w.push_back(std::stoi(tok));
        }
    } else {
        for (char c : s) {
            if (!std::isdigit(static_cast<unsigned char>(c))) throw UsageError(std::string("bad letter '") + c + "'");
            w.push_back(c - '0');
        }
    }
    if (w.empty()) throw UsageError("empty word");
    for (int x : w)
        if (x < 1) throw UsageError("letters must be positive");
    return w;
}

std::string word_text(const Word& w)
{
    const bool small = std::all_of(w.begin(), w.end(), [](int x) { return x <= 9; });
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) out += (small || !i ? "" : ",") + std::to_string(w[i]);
    return out;
}

json read_json(const std::string& path)
{
    try {
        if (path == "-") return json::parse(std::cin);
        std::ifstream in(path);
        if (!in) throw UsageError("cannot open " + path);
        return json::parse(in);
    } catch (const json::exception& e) {
        throw UsageError(std::string("invalid JSON: ") + e.what());
    }
}

// ---- tableau output --------------------------------------------------------------

template <class P, class Q>
void print_pair(const std::string& flavor, const P& p, const Q& q, const std::string& format, const Word* w)
{
    if (format == "json") {
        json j;
        j["flavor"] = flavor;
        if (w) j["word"] = *w;
        j["P"] = render::rows_json(p);
        j["Q"] = render::rows_json(q);
        std::cout << j.dump(2) << "\n";
        return;
    }
    const bool shifted = flavor == "shifted";
    if (flavor == "kyf") {
        std::cout << "P:\n" << render::ascii_kyf(p) << "Q:\n" << render::ascii_kyf(q);
    } else {
        std::cout << "P:\n" << render::ascii_rows(p, shifted) << "Q:\n" << render::ascii_rows(q, shifted);
    }
}

void require_flavor(const std::string& f)
{
    if (f != "rsk" && f != "hecke" && f != "shifted" && f != "kyf") throw UsageError("unknown flavor " + f);
}

int cmd_insert(const std::string& flavor, const std::string& word, const std::string& format)
{
    require_flavor(flavor);
    const Word w = parse_word(word);
    if (flavor == "rsk") {
        auto r = rsk_insert(w);
        print_pair(flavor, r.P, r.Q, format, &w);
    } else if (flavor == "hecke") {
        auto r = hecke_insert_word(w);
        print_pair(flavor, r.P, r.Q, format, &w);
    } else if (flavor == "shifted") {
        auto r = shifted_insert_word(w);
        print_pair(flavor, r.P, r.Q, format, &w);
    } else {
        auto r = kyf_insert_word(w);
        print_pair(flavor, r.P, r.Q, format, &w);
    }
    return kOk;
}

// ---- reverse -----------------------------------------------------------------------

Entry parse_entry(const json& j)
{
    std::string s = j.is_string() ? j.get<std::string>() : std::to_string(j.get<int>());
    Entry e;
    if (!s.empty() && s.back() == 'p') {
        e.primed = true;
        s.pop_back();
    }
    e.value = std::stoi(s);
    return e;
}

int cmd_reverse(const std::string& flavor, const std::string& input)
{
    require_flavor(flavor);
    if (flavor == "rsk") throw UsageError("reverse supports hecke, shifted and kyf");
    const json j = read_json(input);
    if (!j.contains("P") || !j.contains("Q")) throw UsageError("input needs P and Q");
    Word w;
    try {
        const auto P = j.at("P").get<Rows>();
        if (flavor == "hecke") {
            const auto Q = j.at("Q").get<SetValuedTableau>();
            if (!validate_increasing(P).empty() || !validate_set_valued(Q).empty() || shape_of(P) != shape_of(Q))
                throw std::invalid_argument("P and Q are not a valid Hecke pair");
            w = hecke_reverse_word(P, Q);
        } else if (flavor == "shifted") {
            ShiftedSetValuedTableau Q;
            for (const auto& row : j.at("Q")) {
                Q.emplace_back();
                for (const auto& cell : row) {
                    EntrySet es;
                    for (const auto& e : cell) es.push_back(parse_entry(e));
                    Q.back().push_back(es);
                }
            }
            if (!validate_shifted_increasing(P).empty() || !validate_shifted_set_valued(Q).empty() ||
                shape_of(P) != shape_of(Q))
                throw std::invalid_argument("P and Q are not a valid shifted pair");
            w = shifted_reverse_word(P, Q);
        } else {
            const auto Q = j.at("Q").get<KyfSetTableau>();
            if (!validate_kyf(P).empty() || !validate_kyf_set_valued(Q).empty() || snake_of(P) != snake_of(Q))
                throw std::invalid_argument("P and Q are not a valid KYF pair");
            w = kyf_reverse(P, Q);
        }
    } catch (const json::exception& e) {
        throw UsageError(std::string("malformed tableau: ") + e.what());
    }
    std::cout << word_text(w) << "\n";
    return kOk;
}

// ---- growth and decay -------------------------------------------------------------

template <class G>
void print_growth(const G& g, const std::string& format)
{
    if (format == "json")
        std::cout << render::growth_json(g).dump(2) << "\n";
    else
        std::cout << render::ascii_growth(g);
}

// With --decode, JSON mode adds P and Q to the diagram object so stdout stays one document.
template <class G, class Decode>
void print_growth(const G& g, const std::string& flavor, const std::string& format, bool decode, Decode dec)
{
    if (format != "json") {
        print_growth(g, format);
        if (decode) {
            auto d = dec(g);
            print_pair(flavor, d.P, d.Q, "ascii", nullptr);
        }
        return;
    }
    json j = render::growth_json(g);
    if (decode) {
        auto d = dec(g);
        j["P"] = render::rows_json(d.P);
        j["Q"] = render::rows_json(d.Q);
    }
    std::cout << j.dump(2) << "\n";
}

int cmd_growth(const std::string& flavor, const std::string& word, const std::string& format, bool decode)
{
    require_flavor(flavor);
    const Word w = parse_word(word);
    if (flavor == "rsk")
        print_growth(rsk_growth(w), flavor, format, decode, [](const auto& g) { return decode_rsk(g); });
    else if (flavor == "hecke")
        print_growth(hecke_growth(w), flavor, format, decode, [](const auto& g) { return decode_hecke(g); });
    else if (flavor == "shifted")
        print_growth(shifted_growth(w), flavor, format, decode, [](const auto& g) { return decode_shifted(g); });
    else
        print_growth(kyf_growth(w), flavor, format, decode, [](const auto& g) { return decode_kyf(g); });
    return kOk;
}

// Decay starts from the boundary of the forward diagram only; the interior is
// rebuilt by the decay rules and the recovered word is compared to the input.
int cmd_decay(const std::string& flavor, const std::string& word, const std::string& format)
{
    require_flavor(flavor);
    const Word w = parse_word(word);
    Word got;
    json j = json::object();
    if (flavor == "shifted") {
        auto g = shifted_decay(boundary(shifted_growth(w)));
        if (format == "json") j = render::growth_json(g);
        else if (format != "word") print_growth(g, format);
        got = g.word;
    } else if (flavor == "kyf") {
        auto g = kyf_decay(boundary(kyf_growth(w)));
        if (format == "json") j = render::growth_json(g);
        else if (format != "word") print_growth(g, format);
        got = g.word;
    } else if (flavor == "hecke") {
        got = hecke_decay(hecke_growth(w));
    } else {
        throw UsageError("decay supports hecke, shifted and kyf");
    }
    if (format == "json") {
        j["word"] = got;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "word: " << word_text(got) << "\n";
    }
    if (got != w) {
        std::cerr << "decay recovered " << word_text(got) << ", expected " << word_text(w) << "\n";
        return kFailed;
    }
    return kOk;
}

// ---- graphs and identities ---------------------------------------------------------

int cmd_graph(const std::string& family, const std::string& construction, int ranks, const std::string& format,
              bool verify)
{
    if (ranks < 0 || ranks > kRankCap) throw UsageError("--ranks must lie in [0, " + std::to_string(kRankCap) + "]");
    FilteredGraph g;
    try {
        g = build_graph(family, construction, ranks);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (format == "json")
        std::cout << render::graph_json(g).dump(2) << "\n";
    else if (format == "dot")
        std::cout << render::graph_dot(g);
    else
        std::cout << render::graph_ascii(g);
    if (!verify) return kOk;
    const auto [alpha, beta] = duality_parameters(construction);
    const DualityReport rep = verify_duality(g, alpha, beta);
    std::cout << render::duality_text(g, rep);
    return rep.ok ? kOk : kFailed;
}

int cmd_check(const std::string& identity, int n, const std::string& graph_name)
{
    if (n < 0 || n > 7) throw UsageError("--n must lie in [0, 7]");
    if (identity != "stirling" && identity != "frobenius-young" && identity != "oscillating")
        throw UsageError("unknown identity " + identity);
    const auto dash = graph_name.find('-');
    if (dash == std::string::npos) throw UsageError("--graph takes family-construction, e.g. young-mobius");
    FilteredGraph g;
    if (identity != "frobenius-young") {
        try {
            g = build_graph(graph_name.substr(0, dash), graph_name.substr(dash + 1), n + 1);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }
    const IdentityReport rep = check_identity(identity, n, identity == "frobenius-young" ? nullptr : &g);
    std::cout << render::identity_table(rep);
    return rep.ok ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Dual filtered graphs: insertion, growth diagrams, graph constructions and identities"};
    app.require_subcommand(1);

    std::string flavor, word, format = "ascii", input = "-";
    bool decode = false;

    auto* insert = app.add_subcommand("insert", "insert a word, print (P, Q)");
    insert->add_option("flavor", flavor, "rsk|hecke|shifted|kyf")->required();
    insert->add_option("word", word, "digits, or comma separated letters")->required();
    insert->add_option("--format", format, "ascii|json")->check(CLI::IsMember({"ascii", "json"}));

    auto* reverse = app.add_subcommand("reverse", "recover a word from (P, Q) JSON as printed by insert");
    reverse->add_option("flavor", flavor, "hecke|shifted|kyf")->required();
    reverse->add_option("--input", input, "JSON file, - for stdin");

    auto* growth = app.add_subcommand("growth", "print the growth diagram of a word");
    growth->add_option("flavor", flavor, "rsk|hecke|shifted|kyf")->required();
    growth->add_option("word", word)->required();
    growth->add_option("--format", format, "ascii|json")->check(CLI::IsMember({"ascii", "json"}));
    growth->add_flag("--decode", decode, "also print (P, Q) read off the boundary");

    auto* decay = app.add_subcommand("decay", "rebuild a growth diagram from its boundary");
    decay->add_option("flavor", flavor, "hecke|shifted|kyf")->required();
    decay->add_option("word", word)->required();
    decay->add_option("--format", format, "ascii|json|word")->check(CLI::IsMember({"ascii", "json", "word"}));

    std::string family, construction = "none";
    int ranks = 5;
    bool verify = false;
    auto* graph = app.add_subcommand("graph", "build and export a filtered graph");
    graph->add_option("family", family, "young|shifted|yf|fibonacci|polynomial")->required();
    graph->add_option("--construction", construction, "none|trivial|mobius|pieri|pieri-swapped");
    graph->add_option("--ranks", ranks, "maximum rank (at most 14)");
    graph->add_option("--format", format, "ascii|json|dot")->check(CLI::IsMember({"ascii", "json", "dot"}));
    graph->add_flag("--verify", verify, "check DU - UD = beta D + alpha I");

    std::string identity, graph_name = "young-mobius";
    int n = 5;
    auto* check = app.add_subcommand("check", "compare graph side and oracle of an identity");
    check->add_option("identity", identity, "stirling|frobenius-young|oscillating")->required();
    check->add_option("--n", n, "largest n (at most 7)");
    check->add_option("--graph", graph_name, "family-construction, default young-mobius");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return e.get_exit_code() == 0 ? code : kUsage;
    }

    try {
        if (*insert) return cmd_insert(flavor, word, format);
        if (*reverse) return cmd_reverse(flavor, input);
        if (*growth) return cmd_growth(flavor, word, format, decode);
        if (*decay) return cmd_decay(flavor, word, format);
        if (*graph) return cmd_graph(family, construction, ranks, format, verify);
        if (*check) return cmd_check(identity, n, graph_name);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const RuleConflict& e) {
        std::cerr << "rule conflict: " << e.what() << "\n";
        return kConflict;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const TruncationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
