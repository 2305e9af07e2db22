#  This file is part of OctoVector
#  Copyright (c) 2023 Drakkar-Software, All rights reserved.
#  Distributed under the GNU General Public License version 3.0, see <https://www.gnu.org/licenses/>.
import octovector.imagecore as imagecore
import octovector.pipeline as pipeline
import octovector.vectordoc as vectordoc


def create_vectorization_pipeline(config: pipeline.PipelineConfig = None) -> pipeline.VectorizationPipeline:
    return pipeline.VectorizationPipeline(config or pipeline.PipelineConfig())


def vectorize_image_file(image_path: str, config: pipeline.PipelineConfig = None) -> (vectordoc.VectorDocument,
                                                                                       pipeline.PipelineReport):
    return pipeline.vectorize(imagecore.load_image(image_path), config)


def run_vectorization_pipeline(vectorization_pipeline: pipeline.VectorizationPipeline,
                               image: imagecore.RasterImage) -> (vectordoc.VectorDocument, pipeline.PipelineReport):
    return vectorization_pipeline.run(image)


def get_vectorization_report(vectorization_pipeline: pipeline.VectorizationPipeline) -> dict:
    return vectorization_pipeline.report.to_dict()
