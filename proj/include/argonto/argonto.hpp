#pragma once

// Umbrella header: ontology language, translation to an argumentation theory,
// argument construction, attacks and defeats, extension semantics, and the
// reasoning tasks on top.

#include "argonto/formula.hpp"
#include "argonto/ontology.hpp"
#include "argonto/parser.hpp"
#include "argonto/serializer.hpp"
#include "argonto/theory.hpp"
#include "argonto/translation.hpp"
#include "argonto/engine.hpp"
#include "argonto/attacks.hpp"
#include "argonto/preferences.hpp"
#include "argonto/semantics.hpp"
#include "argonto/well_defined.hpp"
#include "argonto/tasks.hpp"
