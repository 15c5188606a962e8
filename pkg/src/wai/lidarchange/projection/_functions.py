import math
from typing import Tuple, Union, Sequence

import numpy as np

from .._DegeneratePointError import DegeneratePointError
from .._Label import Label, LABEL_DTYPE
from ..geometry import Point3, PointCloud
from ._ProjectionConfig import ProjectionConfig
from ._RangeImage import RangeImage

# Sentinels of empty pixels
EMPTY_RANGE = 0.0
EMPTY_INDEX = -1


def project_point(p: Union[Point3, Sequence[float]], cfg: ProjectionConfig) -> Tuple[float, float, float]:
    """
    Projects a point into continuous image coordinates:

        u = 1/2 (1 - atan2(y, x) / pi) W
        v = (1 - (asin(z / r) + fov_down) / fov) H

    :param p:       The point, in the sensor frame.
    :param cfg:     The projection geometry.
    :return:        u, v and the range r.
    """
    x, y, z = (float(value) for value in p)
    r = math.sqrt(x * x + y * y + z * z)

    if r == 0.0:
        raise DegeneratePointError("Can't project a point at the sensor origin")

    u = 0.5 * (1.0 - math.atan2(y, x) / math.pi) * cfg.width
    v = (1.0 - (math.asin(max(-1.0, min(1.0, z / r))) + cfg.fov_down_radians) / cfg.fov_radians) * cfg.height

    return u, v, r


def project_points(positions: np.ndarray, cfg: ProjectionConfig) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """
    Vectorised project_point over an (n, 3) array.

    :param positions:   The points, in the sensor frame.
    :param cfg:         The projection geometry.
    :return:            (n,) arrays u, v and r.
    """
    positions = np.asarray(positions, dtype=np.float64).reshape(-1, 3)
    x, y, z = positions[:, 0], positions[:, 1], positions[:, 2]
    r = np.sqrt(x * x + y * y + z * z)

    if np.any(r == 0.0):
        raise DegeneratePointError("Can't project a point at the sensor origin")

    u = 0.5 * (1.0 - np.arctan2(y, x) / math.pi) * cfg.width
    v = (1.0 - (np.arcsin(np.clip(z / r, -1.0, 1.0)) + cfg.fov_down_radians) / cfg.fov_radians) * cfg.height

    return u, v, r


def pixel_indices(positions: np.ndarray, cfg: ProjectionConfig) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """
    Gets the pixel each point falls into. Columns wrap around in azimuth;
    points whose row is outside [0, H) and points at the origin get no pixel.

    :param positions:   (n, 3) points in the sensor frame.
    :param cfg:         The projection geometry.
    :return:            (n,) flat pixel indices (-1 for none), (n,) ranges,
                        and the (n,) mask of points that have a pixel.
    """
    positions = np.asarray(positions, dtype=np.float64).reshape(-1, 3)
    ranges = np.sqrt(np.sum(positions * positions, axis=1))
    pixels = np.full(len(positions), EMPTY_INDEX, dtype=np.int64)

    projectable = ranges > 0.0
    u, v, _ = project_points(positions[projectable], cfg)
    rows = np.floor(v).astype(np.int64)
    columns = np.mod(np.floor(u).astype(np.int64), cfg.width)

    in_fov = (rows >= 0) & (rows < cfg.height)
    projectable_indices = np.flatnonzero(projectable)
    pixels[projectable_indices[in_fov]] = rows[in_fov] * cfg.width + columns[in_fov]

    return pixels, ranges, pixels >= 0


def render(cloud: PointCloud, cfg: ProjectionConfig) -> RangeImage:
    """
    Renders a cloud into a range image. Each pixel keeps the closest point
    of its frustum (lowest point index on equal ranges); points beyond the
    maximum range are not rendered.

    :param cloud:   The cloud, in the sensor frame.
    :param cfg:     The projection geometry.
    :return:        The range image.
    """
    pixels, ranges, has_pixel = pixel_indices(cloud.positions, cfg)

    candidates = np.flatnonzero(has_pixel & (ranges <= cfg.max_range))
    candidate_pixels = pixels[candidates]

    # Sort by pixel, then range, then point index; the first of each pixel wins
    order = np.lexsort((candidates, ranges[candidates], candidate_pixels))
    sorted_pixels = candidate_pixels[order]
    first = np.ones(len(order), dtype=bool)
    first[1:] = sorted_pixels[1:] != sorted_pixels[:-1]
    winners = candidates[order][first]
    winner_pixels = sorted_pixels[first]

    range_raster = np.full(cfg.height * cfg.width, EMPTY_RANGE, dtype=np.float64)
    index_raster = np.full(cfg.height * cfg.width, EMPTY_INDEX, dtype=np.int64)
    range_raster[winner_pixels] = ranges[winners]
    index_raster[winner_pixels] = winners

    return RangeImage(range_raster.reshape(cfg.shape), index_raster.reshape(cfg.shape), pixels, cfg)


def backproject(raster: np.ndarray, img: RangeImage, fill=0.0) -> np.ndarray:
    """
    Gives every point the value of the pixel it projects into, if that
    pixel is populated. Points occluded within a pixel share the winner's
    value; points with no populated pixel get 'fill'.

    :param raster:  (H, W) per-pixel values.
    :param img:     The range image the points were rendered into.
    :param fill:    The value for points without a populated pixel.
    :return:        (n,) per-point values, of the raster's dtype.
    """
    raster = np.asarray(raster)
    if raster.shape != img.shape:
        raise ValueError(f"Raster shape {raster.shape} doesn't match the image shape {img.shape}")

    values = np.full(img.point_count, fill, dtype=raster.dtype)
    pixel_populated = _points_in_populated_pixels(img)

    values[pixel_populated] = raster.reshape(-1)[img.pixel_of_point[pixel_populated]]
    return values


def backproject_labels(img_labels: np.ndarray, img: RangeImage, n: int) -> np.ndarray:
    """
    Assigns per-pixel class labels to the points of the rendered cloud.
    Points without a populated pixel are Consistent.

    :param img_labels:  (H, W) label raster.
    :param img:         The range image of the cloud.
    :param n:           The number of points in the cloud.
    :return:            (n,) labels.
    """
    if n != img.point_count:
        raise ValueError(f"The image was rendered from {img.point_count} points, not {n}")

    return backproject(np.asarray(img_labels, dtype=LABEL_DTYPE), img, Label.CONSISTENT)


def scatter_to_pixels(point_values: np.ndarray, img: RangeImage) -> np.ndarray:
    """
    Adjoint of backproject: sums per-point values into the populated
    pixels they were read from. Used to turn per-point loss gradients
    into per-pixel gradients.

    :param point_values:    (n,) per-point values.
    :param img:             The range image of the cloud.
    :return:                (H, W) per-pixel sums.
    """
    point_values = np.asarray(point_values, dtype=np.float64)
    if len(point_values) != img.point_count:
        raise ValueError(f"Expected {img.point_count} values, got {len(point_values)}")

    pixel_populated = _points_in_populated_pixels(img)
    sums = np.bincount(img.pixel_of_point[pixel_populated],
                       weights=point_values[pixel_populated],
                       minlength=img.config.height * img.config.width)
    return sums.reshape(img.shape)


def _points_in_populated_pixels(img: RangeImage) -> np.ndarray:
    """
    Gets the (n,) mask of points whose pixel holds a rendered point.
    """
    has_pixel = img.pixel_of_point >= 0
    mask = np.zeros(img.point_count, dtype=bool)
    mask[has_pixel] = img.index_map.reshape(-1)[img.pixel_of_point[has_pixel]] >= 0
    return mask
