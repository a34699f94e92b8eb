#ifndef DIPATH_IO_HPP
#define DIPATH_IO_HPP

#include "dipath/cubical.hpp"
#include "dipath/euclid.hpp"
#include "dipath/homology.hpp"
#include "dipath/partitions.hpp"
#include "dipath/wk.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace dipath {

/// A complex read from a JSON document.
///
///   {"type":"cubical","order":[labels],"cubes":[words]}
///   {"type":"euclidean","k":[...],"exclude":[{"a":[...],"b":[...]}, ...]}
///   {"type":"euclidean","k":[...],"cubes":[{"a":[...],"b":[...]}, ...]}
///
/// Cube lists are kept as given; call closed() for the face-closure.
struct ComplexInput {
    enum class Kind { cubical, euclidean };
    Kind kind = Kind::cubical;
    /// The cubical complex; for Euclidean input, the embedding.
    CubicalComplex cubical;
    std::optional<EuclideanComplex> euclidean;

    bool face_closed() const;
    /// The input with its face-closure taken.
    ComplexInput closed() const;
};

/// Throws ValidationError on malformed documents.
ComplexInput parse_complex(const nlohmann::json& doc);
ComplexInput read_complex_file(const std::string& path);

nlohmann::json to_json(const CubicalComplex& k);
nlohmann::json to_json(const EuclideanComplex& k);
nlohmann::json to_json(const BettiReport& r);
nlohmann::json to_json(const CriticalRoute& r);

/// [{"dim":d,"count":c}, ...] skipping empty dimensions.
nlohmann::json dim_counts(const std::vector<std::size_t>& counts);

/// The same complex with labels listed in a new order. Throws
/// ValidationError unless `order` is a permutation of the labels.
CubicalComplex relabel(const CubicalComplex& k, const std::vector<std::string>& order);

} // namespace dipath

#endif
