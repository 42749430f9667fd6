#pragma once

// Text formats. Blank lines and lines starting with '#' are ignored on input.
//
//   signature      atoms separated by blanks or commas: "a b c"
//   world          every atom in signature order, plain or '!'-prefixed
//   OCF            "<rank>: <world>[, <world>]*", rank an integer or "inf";
//                  every world exactly once
//   TPO            "<layer>: <world>[, <world>]*", layers numbered from 0
//   belief set     one formula per line; the belief set is their closure
//   belief base    one conditional "(B | A)" per line
//   transformation "from: <sig>" / "to: <sig>" then "<world> -> <world>" lines
//   certificate    "partition: <cells>" then a transformation block

#include <string>
#include <string_view>
#include <vector>

#include "epikit/epistemic.hpp"
#include "epikit/inference.hpp"
#include "epikit/logic.hpp"
#include "epikit/splitting.hpp"
#include "epikit/transform.hpp"

namespace epikit::io {

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

Signature parse_signature(std::string_view text);
std::string format_signature(const Signature& sig);

RankingFunction parse_ocf(std::string_view text, const Signature& sig);
std::string format_ocf(const RankingFunction& k);

TotalPreorder parse_tpo(std::string_view text, const Signature& sig);
std::string format_tpo(const TotalPreorder& t);

BeliefSet parse_beliefset(std::string_view text, const Signature& sig);
std::string format_beliefset(const BeliefSet& k);

BeliefBase parse_base(std::string_view text, const Signature& sig);
std::string format_base(const BeliefBase& d);

ModelTransformation parse_transformation(std::string_view text);
std::string format_transformation(const ModelTransformation& phi);

SplittingCertificate parse_certificate(std::string_view text);
std::string format_certificate(const SplittingCertificate& cert);

// Non-empty, non-comment lines, trimmed.
std::vector<std::string> content_lines(std::string_view text);

}  // namespace epikit::io
