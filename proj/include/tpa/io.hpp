#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tpa/generic.hpp"
#include "tpa/modules.hpp"

namespace tpa {

/// Parses a quiver document (.tqa): `quiver <name>` (optional),
/// `L = <int>`, `vertices <name>...` (repeatable), one `label: src -> tgt`
/// line per arrow, `#` comments. Vertices are indexed in declaration
/// order. Throws ParseError (position-annotated) or Error.
TruncatedAlgebra parse_quiver(std::string_view text);

std::string emit_quiver(const TruncatedAlgebra& alg);

/// Module document (.mod): syntax only; resolved against an algebra
/// separately.
struct ModuleDoc {
    struct Relation {
        int slot = 0;  // 1-based in the document
        std::string expr;
        int line = 0;
        int col = 0;
    };

    std::string name;
    std::string quiver_ref;
    std::vector<std::string> slot_vertices;
    std::vector<Relation> relations;
};

/// Parses `module <name>` (optional), `quiver <ref>` (optional),
/// `slots <vertex>...` (repeatable), `rel <slot>: <expr>` lines.
ModuleDoc parse_module_doc(std::string_view text);

/// Resolves vertex names and relation expressions; relation strings
/// compose right to left ("a3*b4*a3" = a3 after b4 after a3) unless
/// left_to_right.
MonomialModule resolve_module(const TruncatedAlgebra& alg,
                              const ModuleDoc& doc,
                              bool left_to_right = false);

std::string emit_module(const MonomialModule& m, std::string_view name,
                        std::string_view quiver_ref);

/// Sequence document (.seq): `sequence <name>` (optional), `quiver <ref>`
/// (optional), then (L+1) rows of n nonnegative integers.
struct SequenceDoc {
    std::string name;
    std::string quiver_ref;
    std::vector<std::vector<long long>> rows;
    int first_row_line = 0;
};

SequenceDoc parse_sequence_doc(std::string_view text);

SemisimpleSequence resolve_sequence(const TruncatedAlgebra& alg,
                                    const SequenceDoc& doc);

std::string emit_sequence(const TruncatedAlgebra& alg,
                          const SemisimpleSequence& S, std::string_view name,
                          std::string_view quiver_ref);

/// Parses a path expression: arrow labels joined by '*', composed
/// right to left unless left_to_right; a lone vertex name denotes the
/// length-0 path. Throws Error on unknown labels or a non-composing
/// sequence.
Path parse_path_expr(const TruncatedAlgebra& alg, std::string_view expr,
                     bool left_to_right = false);

}  // namespace tpa
