#pragma once

#include "xricl/corpus.hpp"
#include "xricl/encoder.hpp"
#include "xricl/generator.hpp"
#include "xricl/pipeline.hpp"
#include "xricl/prompt.hpp"
#include "xricl/reranker.hpp"
#include "xricl/retriever.hpp"
#include "xricl/sqleval.hpp"
#include "xricl/util.hpp"
