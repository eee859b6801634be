#pragma once

#include <stdexcept>
#include <string>

namespace domenum {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct UnknownVertexError : Error {
    explicit UnknownVertexError(const std::string& id) : Error("unknown vertex: " + id) {}
};

struct InvalidEdgeError : Error {
    explicit InvalidEdgeError(const std::string& what) : Error(what) {}
};

struct IsolatedVertexError : Error {
    explicit IsolatedVertexError(const std::string& id) : Error("isolated vertex: " + id) {}
};

struct BadIndexError : Error {
    explicit BadIndexError(const std::string& what) : Error(what) {}
};

struct NotMemberError : Error {
    explicit NotMemberError(const std::string& what) : Error(what) {}
};

struct NotMinimalTransversalError : Error {
    explicit NotMinimalTransversalError(const std::string& what) : Error(what) {}
};

struct NotChordalBipartiteError : Error {
    NotChordalBipartiteError() : Error("graph is not chordal bipartite") {}
};

struct NotChainError : Error {
    explicit NotChainError(const std::string& what) : Error(what) {}
};

struct AdjacentPairError : Error {
    explicit AdjacentPairError(const std::string& what) : Error(what) {}
};

struct NotSeparatorError : Error {
    explicit NotSeparatorError(const std::string& what) : Error(what) {}
};

struct DisconnectedError : Error {
    DisconnectedError() : Error("graph is disconnected") {}
};

struct TooLargeError : Error {
    explicit TooLargeError(const std::string& what) : Error(what) {}
};

struct SupportTooLargeError : Error {
    explicit SupportTooLargeError(const std::string& what) : Error(what) {}
};

struct EmptyDeltaError : Error {
    EmptyDeltaError() : Error("delta family is empty") {}
};

struct InvalidPartitionError : Error {
    explicit InvalidPartitionError(const std::string& what) : Error(what) {}
};

struct EmptyEdgeError : Error {
    EmptyEdgeError() : Error("hypergraph has an empty edge") {}
};

struct NotSpernerError : Error {
    explicit NotSpernerError(const std::string& what) : Error(what) {}
};

struct UncoveredVertexError : Error {
    explicit UncoveredVertexError(const std::string& id) : Error("vertex in no edge: " + id) {}
};

struct MissingVStarError : Error {
    MissingVStarError() : Error("set does not contain the apex vertex") {}
};

struct GenerationFailedError : Error {
    explicit GenerationFailedError(const std::string& what) : Error(what) {}
};

struct IoError : Error {
    explicit IoError(const std::string& what) : Error(what) {}
};

}  // namespace domenum
