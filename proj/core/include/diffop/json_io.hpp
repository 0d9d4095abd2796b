#pragma once

#include <string>

#include "diffop/relations.hpp"
#include "diffop/variety.hpp"

namespace diffop {

// All loaders throw ParseError on malformed JSON or schema violations.

VarietyFile variety_from_json(const std::string& text);
std::string variety_to_json(const VarietyFile& vf);

// Reads and parses a variety file; a missing or unreadable path is a
// ParseError as well.
VarietyFile load_variety_file(const std::string& path);

// Serialization is canonical: fixed key order, 1-based indices, reduced
// polynomial strings. Emit-parse-emit is the identity on the emitted text.
std::string presentation_to_json(const PresentationDoc& doc);
PresentationDoc presentation_from_json(const std::string& text, const RingPtr& ring);

}  // namespace diffop
