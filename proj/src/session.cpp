#include "tanalg/session.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "tanalg/derivations.hpp"
#include "tanalg/errors.hpp"
#include "tanalg/expr_io.hpp"

namespace tanalg {

const Ideal* Session::find_ideal(const std::string& name) const {
    for (const auto& [n, v] : ideals)
        if (n == name) return &v;
    return nullptr;
}

const VField* Session::find_field(const std::string& name) const {
    for (const auto& [n, v] : fields)
        if (n == name) return &v;
    return nullptr;
}

const VfModule* Session::find_module(const std::string& name) const {
    for (const auto& [n, v] : modules)
        if (n == name) return &v;
    return nullptr;
}

const AutoMap* Session::find_auto(const std::string& name) const {
    for (const auto& [n, v] : autos)
        if (n == name) return &v;
    return nullptr;
}

namespace {

std::string trim(const std::string& s) {
    size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

// whitespace split honoring double quotes
std::vector<std::string> split_args(const std::string& s, int line) {
    std::vector<std::string> out;
    std::string cur;
    bool quoted = false;
    for (char c : s) {
        if (c == '"') {
            quoted = !quoted;
        } else if (!quoted && std::isspace(static_cast<unsigned char>(c))) {
            if (!cur.empty()) out.push_back(std::move(cur)), cur.clear();
        } else {
            cur += c;
        }
    }
    if (quoted) throw ParseError("unterminated quote", 0, line, 1);
    if (!cur.empty()) out.push_back(std::move(cur));
    return out;
}

std::vector<std::string> split_on(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(trim(cur));
    return out;
}

[[noreturn]] void fail(int line, const std::string& msg) {
    throw ParseError(msg, 0, line, 1);
}

struct Builder {
    Session s;
    MonomialOrder order;
    std::set<std::string> names;

    void need_ring(int line) const {
        if (!s.ring) fail(line, "ring must be declared before use");
    }

    void claim_name(const std::string& name, int line) {
        if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0])))
            fail(line, "bad name '" + name + "'");
        if (!names.insert(name).second) fail(line, "duplicate name '" + name + "'");
    }

    Poly poly_at(const std::string& text, int line) const {
        try {
            return parse_poly(text, s.ring);
        } catch (const ParseError& e) {
            throw ParseError(e.what(), e.offset, line, e.column);
        }
    }

    VField field_at(const std::string& text, int line) const {
        try {
            return parse_field(text, s.ring);
        } catch (const ParseError& e) {
            throw ParseError(e.what(), e.offset, line, e.column);
        }
    }

    std::vector<Poly> image_list(const std::string& text, int line) const {
        std::vector<Poly> images(static_cast<size_t>(s.ring->nvars()));
        std::vector<bool> seen(images.size(), false);
        for (const auto& piece : split_on(text, ',')) {
            auto arrow = piece.find("->");
            if (arrow == std::string::npos) fail(line, "automorphism image needs 'var -> poly'");
            std::string var = trim(piece.substr(0, arrow));
            auto idx = s.ring->index_of(var);
            if (!idx) fail(line, "unknown variable '" + var + "' in automorphism");
            if (seen[static_cast<size_t>(*idx)]) fail(line, "variable '" + var + "' mapped twice");
            seen[static_cast<size_t>(*idx)] = true;
            images[static_cast<size_t>(*idx)] = poly_at(trim(piece.substr(arrow + 2)), line);
        }
        for (size_t i = 0; i < seen.size(); ++i)
            if (!seen[i]) fail(line, "automorphism misses variable '" + s.ring->names[i] + "'");
        return images;
    }
};

} // namespace

Session parse_session(const std::string& text, MonomialOrder order) {
    Builder b;
    b.order = order;

    std::istringstream stream(text);
    std::string raw;
    int line = 0;
    while (std::getline(stream, raw)) {
        ++line;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::string s = trim(raw);
        if (s.empty()) continue;

        auto space = s.find_first_of(" \t");
        std::string head = space == std::string::npos ? s : s.substr(0, space);
        std::string rest = space == std::string::npos ? "" : trim(s.substr(space + 1));

        if (head == "ring") {
            if (b.s.ring) fail(line, "ring already declared");
            auto names = split_ws(rest);
            if (names.empty()) fail(line, "ring needs variable names");
            try {
                b.s.ring = make_ring(names, order);
            } catch (const Error& e) {
                fail(line, e.what());
            }
            continue;
        }
        if (head == "task") {
            b.need_ring(line);
            auto args = split_args(rest, line);
            if (args.empty()) fail(line, "task needs a verb");
            TaskDirective t;
            t.verb = args[0];
            t.args.assign(args.begin() + 1, args.end());
            t.line = line;
            b.s.tasks.push_back(std::move(t));
            continue;
        }

        auto colon = rest.find(':');
        if (colon == std::string::npos) fail(line, "expected 'NAME: ...' after '" + head + "'");
        std::string name = trim(rest.substr(0, colon));
        std::string body = trim(rest.substr(colon + 1));
        b.need_ring(line);

        if (head == "ideal") {
            b.claim_name(name, line);
            std::vector<Poly> gens;
            for (const auto& piece : split_on(body, ';')) gens.push_back(b.poly_at(piece, line));
            if (gens.empty()) fail(line, "ideal needs at least one generator");
            b.s.ideals.emplace_back(name, Ideal(b.s.ring, std::move(gens)));
        } else if (head == "field") {
            b.claim_name(name, line);
            b.s.fields.emplace_back(name, b.field_at(body, line));
        } else if (head == "module") {
            b.claim_name(name, line);
            auto words = split_ws(body);
            if (!words.empty() && words[0] == "tangent") {
                if (words.size() != 2) fail(line, "expected 'tangent IDEAL'");
                const Ideal* I = b.s.find_ideal(words[1]);
                if (!I) fail(line, "unknown ideal '" + words[1] + "'");
                b.s.modules.emplace_back(name, tangent_algebra(make_variety(*I)));
            } else {
                std::vector<VField> gens;
                for (const auto& piece : split_on(body, ';'))
                    gens.push_back(b.field_at(piece, line));
                b.s.modules.emplace_back(
                    name, VfModule(b.s.ring, b.s.ring->nvars(), std::move(gens)));
            }
        } else if (head == "auto") {
            b.claim_name(name, line);
            auto words = split_ws(body);
            if (!words.empty() && words[0] == "compose") {
                if (words.size() != 3) fail(line, "expected 'compose A B'");
                const AutoMap* a = b.s.find_auto(words[1]);
                const AutoMap* c = b.s.find_auto(words[2]);
                if (!a || !c) fail(line, "unknown automorphism in compose");
                b.s.autos.emplace_back(name, AutoMap::compose(*a, *c));
            } else {
                auto inv = body.find(" inverse ");
                try {
                    if (inv == std::string::npos) {
                        b.s.autos.emplace_back(
                            name, AutoMap::from_images(b.s.ring, b.image_list(body, line)));
                    } else {
                        b.s.autos.emplace_back(
                            name, AutoMap::with_inverse(
                                      b.s.ring, b.image_list(trim(body.substr(0, inv)), line),
                                      b.image_list(trim(body.substr(inv + 9)), line)));
                    }
                } catch (const DomainError& e) {
                    // construction preconditions keep their class, with position
                    throw DomainError("line " + std::to_string(line) + ": " + e.what());
                }
            }
        } else {
            fail(line, "unknown directive '" + head + "'");
        }
    }
    if (!b.s.ring) throw ParseError("session declares no ring", 0, 1, 1);
    return b.s;
}

} // namespace tanalg
