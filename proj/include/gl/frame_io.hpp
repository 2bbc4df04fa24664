#ifndef GL_FRAME_IO_HPP
#define GL_FRAME_IO_HPP

#include <string>

#include "json.hpp"

#include "gl/kripke.hpp"
#include "gl/prover.hpp"

namespace gl {

// Frame documents are JSON objects with exactly two keys:
//   "worlds": array of distinct world names (strings)
//   "edges":  array of [from, to] world-name pairs
// Unknown keys are rejected so typos fail loudly instead of silently
// validating a different frame.
Frame frame_from_json(const nlohmann::json& doc);
nlohmann::json frame_to_json(const Frame& fr);

// Reads a frame document from disk. Throws std::runtime_error when the file
// is unreadable and json/structure errors for bad content.
Frame load_frame(const std::string& path);

// {"frame": ..., "valuation": {var: [world names]}}
nlohmann::json model_to_json(const Model& m);

// Model payload plus "world": the refuting world's name.
nlohmann::json countermodel_to_json(const Countermodel& cm);

nlohmann::json sequent_to_json(const Sequent& s);
nlohmann::json proof_tree_to_json(const ProofTree& t);

}  // namespace gl

#endif
