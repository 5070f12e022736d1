#ifndef TANALG_SESSION_HPP
#define TANALG_SESSION_HPP

#include <string>
#include <utility>
#include <vector>

#include "tanalg/automorphism.hpp"
#include "tanalg/groebner.hpp"

namespace tanalg {

struct TaskDirective {
    std::string verb;
    std::vector<std::string> args;
    int line = 0;
};

// Parsed session file. Declarations keep insertion order; names are unique
// across all kinds and every reference resolves at parse time.
struct Session {
    RingPtr ring;
    std::vector<std::pair<std::string, Ideal>> ideals;
    std::vector<std::pair<std::string, VField>> fields;
    std::vector<std::pair<std::string, VfModule>> modules;
    std::vector<std::pair<std::string, AutoMap>> autos;
    std::vector<TaskDirective> tasks;

    const Ideal* find_ideal(const std::string& name) const;
    const VField* find_field(const std::string& name) const;
    const VfModule* find_module(const std::string& name) const;
    const AutoMap* find_auto(const std::string& name) const;
};

// Line-oriented format, one declaration per line, '#' comments:
//   ring x y z
//   ideal NAME: f1; f2
//   field NAME: [a1, a2, a3]
//   module NAME: [a1, a2]; [b1, b2]     (or: module NAME: tangent IDEAL)
//   auto NAME: x -> ..., y -> ...       (optional: inverse x -> ..., ...)
//   auto NAME: compose A B
//   task VERB ARGS...
Session parse_session(const std::string& text, MonomialOrder order);

} // namespace tanalg

#endif
