#ifndef GTHZ_STACK_HPP
#define GTHZ_STACK_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "gthz/conductivity.hpp"

namespace gthz {

struct DielectricLayer {
  double relative_permittivity = 1.0;
  std::optional<double> thickness;  // metres; empty for a semi-infinite cladding

  static DielectricLayer semi_infinite(double eps_r) { return {eps_r, std::nullopt}; }
  static DielectricLayer film(double eps_r, double thickness_m) { return {eps_r, thickness_m}; }
  bool is_semi_infinite() const { return !thickness.has_value(); }
};

enum class StackPreset { kG, kH1G, kH2G, kCustom };

std::string_view to_string(StackPreset preset);
std::optional<StackPreset> parse_stack_preset(std::string_view name);

// Layer data behind the G/H1G/H2G presets. LIM = low-index (quartz-like),
// HIM = high-index (silicon-like).
struct StackPresetConfig {
  double cover_permittivity = 1.0;
  double lim_permittivity = 3.8;
  double him_permittivity = 11.9;
  double h1g_film_thickness = 10e-6;
  double h2g_film_thickness = 5e-6;
};

/// Planar stack ordered from the top cladding to the bottom cladding.
///
/// Interface i separates layer i from layer i + 1; graphene sheets sit on
/// interfaces. The first and last layers are semi-infinite, every inner
/// layer has a finite positive thickness.
class LayeredStack {
 public:
  LayeredStack(std::vector<DielectricLayer> layers, std::map<std::size_t, GrapheneSheet> sheets,
               StackPreset preset = StackPreset::kCustom);

  /// Graphene sheet between two half-spaces.
  static LayeredStack two_half_space(double eps_top, double eps_bottom, const GrapheneSheet& sheet);

  static LayeredStack preset(StackPreset preset, const GrapheneSheet& sheet,
                             const StackPresetConfig& config = {});

  const std::vector<DielectricLayer>& layers() const { return layers_; }
  const std::map<std::size_t, GrapheneSheet>& sheets() const { return sheets_; }
  StackPreset preset_tag() const { return preset_; }
  std::size_t interface_count() const { return layers_.size() - 1; }

  double top_permittivity() const { return layers_.front().relative_permittivity; }
  double bottom_permittivity() const { return layers_.back().relative_permittivity; }
  double max_cladding_index() const;
  double max_layer_index() const;

  /// Same stack with every sheet set to the given chemical potential.
  LayeredStack with_chemical_potential(double ev) const;
  LayeredStack with_relaxation_time(double seconds) const;
  /// Stack flipped top to bottom.
  LayeredStack reversed() const;

 private:
  std::vector<DielectricLayer> layers_;
  std::map<std::size_t, GrapheneSheet> sheets_;
  StackPreset preset_;
};

}  // namespace gthz

#endif  // GTHZ_STACK_HPP
