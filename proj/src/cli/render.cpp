#include "nell/cli/render.hpp"

#include <iomanip>
#include <sstream>

namespace nell::cli {

using nlohmann::json;

json to_json(const CommandResult& r) {
    json j = {{"command", r.command}, {"params", r.params}, {"data", r.data}};
    j["seed"] = r.seed ? json(*r.seed) : json(nullptr);
    return j;
}

CommandResult from_json(const json& j) {
    CommandResult r;
    r.command = j.at("command").get<std::string>();
    r.params = j.at("params");
    r.data = j.at("data");
    if (j.contains("seed") && !j.at("seed").is_null()) r.seed = j.at("seed").get<std::uint64_t>();
    return r;
}

std::string render_json(const CommandResult& r) { return to_json(r).dump(2) + "\n"; }

CommandResult parse_json(const std::string& text) { return from_json(json::parse(text)); }

namespace {

std::string s(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

std::string factor_line(const json& f) {
    std::ostringstream out;
    bool first = true;
    for (const auto& e : f.at("factors")) {
        if (!first) out << " o ";
        first = false;
        out << s(e["element"]);
        if (e["multiplicity"].get<unsigned>() > 1) out << "^" << e["multiplicity"].get<unsigned>();
        out << " [norm " << s(e["norm"]) << ", " << (e["prime"].get<bool>() ? "prime" : "irreducible, not prime")
            << "]";
    }
    return out.str();
}

void text_primes(std::ostream& out, const CommandResult& r) {
    out << "prime elements of nEll(Z), n = " << s(r.params["n"]) << ", |norm| <= " << s(r.params["bound"]) << "\n";
    out << std::setw(14) << "element" << std::setw(14) << "norm" << std::setw(14) << "q" << std::setw(10)
        << "q mod n+1" << "\n";
    for (const auto& row : r.data["rows"])
        out << std::setw(14) << s(row["element"]) << std::setw(14) << s(row["norm"]) << std::setw(14)
            << s(row["prime"]) << std::setw(10) << s(row["residue"]) << "\n";
    out << r.data["count"].get<std::uint64_t>() << " found\n";
}

void text_factor(std::ostream& out, const CommandResult& r) {
    out << "a = " << s(r.data["target"]) << ", norm " << s(r.data["norm"]) << ", n = " << s(r.params["n"]) << "\n";
    const auto& list = r.data["factorizations"];
    if (r.params["all"].get<bool>()) out << list.size() << " factorization(s)\n";
    for (const auto& f : list) out << "  " << factor_line(f) << "\n";
    if (r.data["cap_exceeded"].get<bool>()) out << "  (list truncated)\n";
}

void text_classgroup(std::ostream& out, const CommandResult& r) {
    const auto& d = r.data;
    out << "Cl_n(Z), n = " << s(r.params["n"]) << "\n";
    out << "  order        " << s(d["order"]) << " (phi = " << s(d["totient"]) << ")\n";
    out << "  classes     ";
    for (const auto& c : d["classes"]) out << " " << s(c);
    out << "\n  trivial      " << (d["trivial"].get<bool>() ? "yes" : "no") << "\n";
    out << "  irred=prime  " << (d["irred_equals_prime"].get<bool>() ? "yes" : "no") << "\n";
}

void text_dirichlet(std::ostream& out, const CommandResult& r) {
    const auto& d = r.data;
    out << "n = " << s(r.params["n"]) << ", bound " << s(r.params["bound"]) << "\n";
    out << "  prime elements   " << s(d["enumerated_count"]) << " (+1: " << s(d["enumerated_split"]["plus_one"])
        << ", -1: " << s(d["enumerated_split"]["minus_one"]) << ")\n";
    out << "  sieve            " << s(d["sieve_count"]) << " (+1: " << s(d["sieve_split"]["plus_one"])
        << ", -1: " << s(d["sieve_split"]["minus_one"]) << ")\n";
    out << "  equal            " << (d["equal"].get<bool>() ? "yes" : "NO") << "\n";
}

void text_euclid(std::ostream& out, const CommandResult& r) {
    const auto& d = r.data;
    out << "seeds:";
    for (const auto& q : r.params["seeds"]) out << " " << s(q);
    out << "\n";
    const std::string which = d["case"].get<std::string>();
    if (which == "empty_list") {
        out << "  empty list: 1 is irreducible\n";
    } else {
        out << "  N = " << s(d["n_value"]) << " (norm " << s(d["n_norm"]) << ")\n";
        out << "  M = 1 - N = " << s(d["m_value"]) << " (norm " << s(d["m_norm"]) << ")\n";
        if (which == "m_zero")
            out << "  M = 0: factor 2 instead; a listed factor would divide gcd(n, 2n+1) = " << s(d["obstruction"])
                << "\n";
        else
            out << "  M != 0: a listed factor would divide 1 - n = " << s(d["obstruction"]) << "\n";
        out << "  " << s(d["factored"]) << " = " << factor_line(d["factorization"]) << "\n";
    }
    out << "  new irreducible " << s(d["new_irreducible"]) << " (norm " << s(d["new_norm"]) << ")"
        << (d["outside_list"].get<bool>() ? "" : "  ** already listed **") << "\n";
}

void text_axioms(std::ostream& out, const CommandResult& r) {
    const auto& d = r.data;
    auto mark = [&](const char* key) { return d[key].get<bool>() ? "pass" : "FAIL"; };
    out << "nEll(Z/" << s(r.params["mod"]) << "), n = " << s(r.params["n"]) << "\n";
    out << "  EG1             " << mark("eg1") << "\n";
    out << "  EG2             " << mark("eg2") << "\n";
    out << "  EG3             " << mark("eg3") << "\n";
    out << "  distributivity  " << mark("distributivity") << "\n";
    out << "  " << (d["exhaustive"].get<bool>() ? "exhaustive" : "sampled, seed " + s(r.params["seed"])) << ", "
        << s(d["samples_checked"]) << " evaluations\n";
    if (!d["counterexample"].is_null()) {
        out << "  counterexample (" << s(d["counterexample"]["law"]) << "):";
        for (const auto& x : d["counterexample"]["inputs"]) out << " " << s(x);
        out << "\n";
    }
}

void text_table(std::ostream& out, const CommandResult& r) {
    out << "n = " << s(r.params["n"]) << std::left << "\n";
    out << "  " << std::setw(28) << "" << std::setw(26) << "nEll(Z)" << "nEll(Z[1/(n+1)])\n";
    for (const auto& row : r.data["rows"])
        out << "  " << std::setw(28) << s(row["property"]) << std::setw(26) << s(row["integers"])
            << s(row["localization"]) << "\n";
}

}  // namespace

std::string render_text(const CommandResult& r) {
    std::ostringstream out;
    if (r.command == "primes") text_primes(out, r);
    else if (r.command == "factor") text_factor(out, r);
    else if (r.command == "classgroup") text_classgroup(out, r);
    else if (r.command == "dirichlet") text_dirichlet(out, r);
    else if (r.command == "euclid") text_euclid(out, r);
    else if (r.command == "axioms") text_axioms(out, r);
    else if (r.command == "table") text_table(out, r);
    else out << to_json(r).dump(2) << "\n";
    return out.str();
}

}  // namespace nell::cli
