from typing import List, Tuple

import numpy as np

from .._Label import Label, LABEL_DTYPE
from ..geometry import PointCloud, RigidTransform, SENSOR_FRAME, WORLD_FRAME, transform, voxel_downsample
from ..logging import LoggingMixin
from ._Frame import Frame
from ._RepeatSequence import RepeatSequence
from ._SceneSpec import SceneSpec
from ._map_view import crop_map, map_view_radius


class SequenceGenerator(LoggingMixin):
    """
    Simulates a teach pass (to build the map) and a repeat pass (to
    produce the stored frames) through a scene.

    Teach stations sit half a frame spacing after the repeat stations, so
    the map is never sampled from exactly the same viewpoints. Change
    objects are only present during the repeat pass, vegetation is
    re-jittered for every repeat scan, and reflective clutter only returns
    ghosts during the repeat pass.
    """
    def __init__(self, spec: SceneSpec, seed: int = 0, map_voxel: float = 0.05):
        if spec.path.is_degenerate():
            raise ValueError("Can't drive a zero-length path")

        if not map_voxel > 0.0:
            raise ValueError(f"Map voxel size must be positive, got {map_voxel}")

        self.spec: SceneSpec = spec
        self.seed: int = int(seed)
        self.map_voxel: float = float(map_voxel)
        self._directions: np.ndarray = spec.sensor.ray_directions()

    def repeat_stations(self) -> np.ndarray:
        """
        Path distances of the stored repeat frames.
        """
        return np.arange(0.0, self.spec.path.length + 1e-9, self.spec.frame_spacing)

    def teach_stations(self) -> np.ndarray:
        """
        Path distances from which the map is sampled.
        """
        stations = np.arange(self.spec.frame_spacing / 2.0, self.spec.path.length, self.spec.frame_spacing)
        return stations if len(stations) > 0 else np.zeros(1)

    def pose_at(self, distance: float) -> RigidTransform:
        """
        Gets the sensor pose at a distance along the path.
        """
        x, y, heading = self.spec.path.interpolate(distance)
        return RigidTransform.from_yaw(heading, (x, y, self.spec.sensor.height))

    def generate(self) -> RepeatSequence:
        rng = np.random.default_rng(self.seed)

        vegetation = [patch.sample_elements(rng) for patch in self.spec.vegetation]

        teach_stations = self.teach_stations()
        self.logger.info(f"Teaching map from {len(teach_stations)} stations")
        teach_scans = []
        for distance in teach_stations:
            pose = self.pose_at(distance)
            scan, _ = self.scan(pose, vegetation, False, rng)
            teach_scans.append(transform(scan, pose, WORLD_FRAME))
        world_map = voxel_downsample(PointCloud.concatenate(teach_scans), self.map_voxel)
        self.logger.info(f"Map has {len(world_map)} points")

        radius = map_view_radius(self.spec.sensor.projection)
        frames: List[Frame] = []
        for index, distance in enumerate(self.repeat_stations()):
            pose = self.pose_at(distance)
            jittered = [patch.jittered(elements, rng) for patch, elements in zip(self.spec.vegetation, vegetation)]
            live, truth = self.scan(pose, jittered, True, rng)
            frames.append(Frame(live, pose, crop_map(world_map, pose, radius), truth, float(distance), index))
            self.logger.debug(f"{frames[-1]}")

        self.logger.info(f"Generated {len(frames)} repeat frames "
                         f"({sum(int(np.sum(frame.truth)) for frame in frames)} changed points)")

        return RepeatSequence(world_map, frames, self.spec.path, self.spec, self.seed)

    def scan(self,
             pose: RigidTransform,
             vegetation: List[np.ndarray],
             with_changes: bool,
             rng: np.random.Generator) -> Tuple[PointCloud, np.ndarray]:
        """
        Simulates one scan.

        :param pose:            The sensor pose.
        :param vegetation:      Current element positions of each vegetation patch.
        :param with_changes:    Whether this is a repeat scan: change objects
                                are present and clutter returns ghosts.
        :param rng:             The random source for noise and intensity.
        :return:                The scan (sensor frame, with intensity) and the
                                true label of each point.
        """
        spec = self.spec
        origin = pose.translation
        directions = self._directions @ pose.rotation.T

        # Candidate hit distances per surface, with (changed, reflective) flags
        distances = [self._ground_hit(origin, directions)]
        flags = [(False, False)]
        for shape in spec.boxes + spec.cylinders:
            distances.append(shape.intersect(origin, directions))
            flags.append((False, False))
        for patch, elements in zip(spec.vegetation, vegetation):
            distances.append(patch.intersect(elements, origin, directions))
            flags.append((False, False))
        clutter_surfaces = []
        for clutter in spec.clutter:
            clutter_surfaces.append(len(distances))
            distances.append(clutter.shape.intersect(origin, directions))
            flags.append((False, True))
        if with_changes:
            for change in spec.changes:
                distances.append(change.shape.intersect(origin, directions))
                flags.append((True, change.reflective))

        distances = np.stack(distances)
        surface = np.argmin(distances, axis=0)
        hit_distance = distances[surface, np.arange(distances.shape[1])]
        hit = np.isfinite(hit_distance) & (hit_distance <= spec.sensor.projection.max_range)

        surface = surface[hit]
        changed = np.array([flag[0] for flag in flags])[surface]
        reflective = np.array([flag[1] for flag in flags])[surface]

        ranges = hit_distance[hit] + rng.normal(0.0, spec.sensor.range_noise, len(surface))
        if with_changes:
            for clutter, index in zip(spec.clutter, clutter_surfaces):
                on_clutter = surface == index
                ranges[on_clutter] = clutter.ghost_ranges(ranges[on_clutter], rng)
        ranges = np.maximum(ranges, 1e-3)
        positions = self._directions[hit] * ranges[:, None]

        intensity = rng.uniform(*spec.background_intensity, len(surface))
        intensity[reflective] = rng.uniform(*spec.reflective_intensity, int(np.sum(reflective)))

        truth = np.where(changed, Label.CHANGED, Label.CONSISTENT).astype(LABEL_DTYPE)

        return PointCloud(positions, intensity, SENSOR_FRAME), truth

    def _ground_hit(self, origin: np.ndarray, directions: np.ndarray) -> np.ndarray:
        dz = directions[:, 2]
        with np.errstate(divide="ignore", invalid="ignore"):
            t = -origin[2] / dz
        x = origin[0] + t * directions[:, 0]
        y = origin[1] + t * directions[:, 1]
        extent = self.spec.ground_extent
        return np.where((dz < 0.0) & (np.abs(x) <= extent) & (np.abs(y) <= extent), t, np.inf)
