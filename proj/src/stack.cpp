#include "gthz/stack.hpp"

#include <algorithm>
#include <cmath>

#include "gthz/error.hpp"

namespace gthz {

std::string_view to_string(StackPreset preset) {
  switch (preset) {
    case StackPreset::kG: return "G";
    case StackPreset::kH1G: return "H1G";
    case StackPreset::kH2G: return "H2G";
    case StackPreset::kCustom: return "custom";
  }
  return "custom";
}

std::optional<StackPreset> parse_stack_preset(std::string_view name) {
  if (name == "G") return StackPreset::kG;
  if (name == "H1G") return StackPreset::kH1G;
  if (name == "H2G") return StackPreset::kH2G;
  if (name == "custom") return StackPreset::kCustom;
  return std::nullopt;
}

LayeredStack::LayeredStack(std::vector<DielectricLayer> layers,
                           std::map<std::size_t, GrapheneSheet> sheets, StackPreset preset)
    : layers_(std::move(layers)), sheets_(std::move(sheets)), preset_(preset) {
  require(layers_.size() >= 2, "a stack needs at least two layers");
  require(!sheets_.empty(), "a stack needs at least one graphene sheet");
  require(layers_.front().is_semi_infinite() && layers_.back().is_semi_infinite(),
          "claddings must be semi-infinite");
  for (std::size_t i = 0; i < layers_.size(); ++i) {
    const auto& layer = layers_[i];
    require(layer.relative_permittivity >= 1.0 && std::isfinite(layer.relative_permittivity),
            "relative permittivity must be >= 1");
    if (i != 0 && i + 1 != layers_.size()) {
      require(!layer.is_semi_infinite(), "only the claddings may be semi-infinite");
      require(*layer.thickness > 0.0 && std::isfinite(*layer.thickness),
              "layer thickness must be > 0");
    }
  }
  for (const auto& [index, sheet] : sheets_) {
    require(index < interface_count(), "sheet placed on a non-existent interface");
  }
}

LayeredStack LayeredStack::two_half_space(double eps_top, double eps_bottom,
                                          const GrapheneSheet& sheet) {
  return {{DielectricLayer::semi_infinite(eps_top), DielectricLayer::semi_infinite(eps_bottom)},
          {{0, sheet}}};
}

LayeredStack LayeredStack::preset(StackPreset preset, const GrapheneSheet& sheet,
                                  const StackPresetConfig& cfg) {
  const auto cover = DielectricLayer::semi_infinite(cfg.cover_permittivity);
  const auto lim = DielectricLayer::semi_infinite(cfg.lim_permittivity);
  switch (preset) {
    case StackPreset::kG:
      return {{cover, lim}, {{0, sheet}}, preset};
    case StackPreset::kH1G:
      return {{cover, DielectricLayer::film(cfg.him_permittivity, cfg.h1g_film_thickness), lim},
              {{0, sheet}},
              preset};
    case StackPreset::kH2G: {
      const auto him = DielectricLayer::film(cfg.him_permittivity, cfg.h2g_film_thickness);
      return {{cover, him, him, lim}, {{1, sheet}}, preset};
    }
    case StackPreset::kCustom:
      break;
  }
  throw std::invalid_argument("custom stacks have no preset geometry");
}

double LayeredStack::max_cladding_index() const {
  return std::sqrt(std::max(top_permittivity(), bottom_permittivity()));
}

double LayeredStack::max_layer_index() const {
  double eps = 1.0;
  for (const auto& layer : layers_) eps = std::max(eps, layer.relative_permittivity);
  return std::sqrt(eps);
}

LayeredStack LayeredStack::with_chemical_potential(double ev) const {
  auto sheets = sheets_;
  for (auto& [index, sheet] : sheets) sheet = sheet.with_chemical_potential(ev);
  return {layers_, std::move(sheets), preset_};
}

LayeredStack LayeredStack::with_relaxation_time(double seconds) const {
  auto sheets = sheets_;
  for (auto& [index, sheet] : sheets) sheet = sheet.with_relaxation_time(seconds);
  return {layers_, std::move(sheets), preset_};
}

LayeredStack LayeredStack::reversed() const {
  std::vector<DielectricLayer> layers(layers_.rbegin(), layers_.rend());
  std::map<std::size_t, GrapheneSheet> sheets;
  const std::size_t last = interface_count() - 1;
  for (const auto& [index, sheet] : sheets_) sheets.emplace(last - index, sheet);
  return {std::move(layers), std::move(sheets), preset_};
}

}  // namespace gthz
