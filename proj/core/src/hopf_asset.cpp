#include "coopx/hopf.hpp"

#include <iterator>

#include "coopx/error.hpp"

namespace coopx {

namespace {

constexpr const char* kVersion = "s3-12/2";

// A 12-vertex 3-sphere on which the coloring below is a simplicial map of
// Hopf invariant one onto the boundary of the tetrahedron. Each color class
// is a 3-cycle of edges, the fibre over one corner; the four fibres are
// pairwise linked once.
constexpr int kFacets[][4] = {
    {0, 1, 3, 4},   {0, 1, 3, 11},  {0, 1, 4, 7},   {0, 1, 7, 11},  {0, 2, 4, 5},   {0, 2, 4, 9},
    {0, 2, 5, 6},   {0, 2, 6, 9},   {0, 3, 4, 9},   {0, 3, 9, 11},  {0, 4, 5, 7},   {0, 5, 6, 7},
    {0, 6, 7, 11},  {0, 6, 9, 11},  {1, 2, 3, 8},   {1, 2, 3, 11},  {1, 2, 7, 10},  {1, 2, 7, 11},
    {1, 2, 8, 10},  {1, 3, 4, 8},   {1, 4, 7, 8},   {1, 7, 8, 10},  {2, 3, 5, 6},   {2, 3, 5, 11},
    {2, 3, 6, 8},   {2, 4, 5, 11},  {2, 4, 9, 10},  {2, 4, 10, 11}, {2, 6, 8, 9},   {2, 7, 10, 11},
    {2, 8, 9, 10},  {3, 4, 8, 9},   {3, 5, 6, 11},  {3, 6, 8, 9},   {3, 6, 9, 11},  {4, 5, 7, 11},
    {4, 7, 8, 10},  {4, 7, 10, 11}, {4, 8, 9, 10},  {5, 6, 7, 11},
};

constexpr int kColors[12] = {0, 0, 0, 1, 1, 1, 2, 2, 2, 3, 3, 3};

constexpr std::uint64_t kChecksum = 0x319facbbcb5935bdULL;

// Vertex coordinates in R^4 as numerator/denominator pairs. The complex is
// star-shaped about the origin: every cone [0, f] is positively oriented.
constexpr long kPositions[12][4][2] = {
    {{-431, 1000}, {-73, 200}, {-239, 1000}, {81, 1000}},
    {{61, 500}, {67, 500}, {163, 1000}, {-37, 200}},
    {{33, 125}, {371, 1000}, {57, 200}, {117, 1000}},
    {{-49, 200}, {-131, 1000}, {147, 200}, {-389, 1000}},
    {{-119, 500}, {181, 1000}, {-273, 1000}, {-251, 1000}},
    {{79, 125}, {129, 500}, {67, 1000}, {19, 25}},
    {{-37, 100}, {59, 200}, {359, 500}, {253, 500}},
    {{17, 50}, {-199, 500}, {-61, 100}, {313, 1000}},
    {{-7, 500}, {141, 250}, {333, 1000}, {-639, 1000}},
    {{-153, 200}, {233, 1000}, {583, 1000}, {-37, 500}},
    {{157, 1000}, {729, 1000}, {-233, 500}, {-431, 1000}},
    {{1057, 1000}, {-21, 100}, {-83, 250}, {951, 1000}},
};

HopfAsset load() {
  HopfAsset a;
  a.version = kVersion;
  SimplicialComplex k;
  k.vertices = 12;
  for (const auto& f : kFacets) k.facets.push_back({f[0], f[1], f[2], f[3]});
  a.colors.assign(std::begin(kColors), std::end(kColors));
  a.checksum = asset_checksum(k, a.colors);
  if (a.checksum != kChecksum) throw Error(ErrorCode::MalformedInput, "Hopf asset checksum mismatch");
  const ManifoldReport report = validate_closed_manifold(k);
  if (!report.ok() || report.euler != 0) throw Error(ErrorCode::NotSphere, "Hopf asset fails the manifold checks");
  a.complex = orient(k);
  for (const auto& p : kPositions) {
    Vector y;
    for (const auto& q : p) y.push_back(make_rational(q[0], q[1]));
    a.positions.push_back(std::move(y));
  }
  return a;
}

}  // namespace

std::uint64_t asset_checksum(const SimplicialComplex& k, const std::vector<int>& colors) {
  std::string text = "v" + std::to_string(k.vertices) + ";";
  for (const Simplex& f : k.facets) {
    for (int v : f) text += std::to_string(v) + ",";
    text += ";";
  }
  for (int c : colors) text += std::to_string(c);
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return h;
}

const HopfAsset& hopf_asset() {
  static const HopfAsset asset = load();
  return asset;
}

}  // namespace coopx
