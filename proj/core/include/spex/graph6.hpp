#pragma once

// Text serialization of undirected graphs in graph6 format: a header-free
// ASCII line holding the order followed by the upper triangle of the
// adjacency matrix, packed six bits per printable byte.

#include <string>

#include "spex/graph.hpp"

namespace spex {

std::string graph6_encode(const Graph& g);

// Accepts an optional trailing newline; throws ParseError (with the byte
// offset in the message) on anything malformed.
Graph graph6_decode(const std::string& text);

}  // namespace spex
