#ifndef SCALAR_SCALAR_HPP
#define SCALAR_SCALAR_HPP

#include "scalar/baseline_tagger.hpp"
#include "scalar/cache.hpp"
#include "scalar/dataset.hpp"
#include "scalar/embeddings.hpp"
#include "scalar/error.hpp"
#include "scalar/features.hpp"
#include "scalar/gbt.hpp"
#include "scalar/lexicon.hpp"
#include "scalar/metrics.hpp"
#include "scalar/pipeline.hpp"
#include "scalar/tags.hpp"
#include "scalar/tokenizer.hpp"

#endif  // SCALAR_SCALAR_HPP
